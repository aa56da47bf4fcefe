#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gcrys/whittaker/whittaker.hpp"

namespace gcrys::wh {

void QuadSpec::validate() const {
  if (points_per_dim < 8) throw std::invalid_argument("points_per_dim must be at least 8");
  if (truncation && !(*truncation > 0)) throw std::invalid_argument("truncation must be positive");
  if (!(boundary_rel > 0 && boundary_rel < 1)) throw std::invalid_argument("boundary_rel must lie in (0, 1)");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
}

namespace {

struct Raw {
  EvalResult r;
  double boundary = 0;  // log of boundary max relative to the peak
};

Raw integrate_raw(const LogIntegrand& f, const LogGrid& g, double shift, const QuadSpec& spec) {
  KernelSums s = spec.parallel ? trapezoid_omp(f, g, shift, spec.precision) : trapezoid_serial(f, g, shift, spec.precision);
  double logvol = 0;
  for (int k = 0; k < g.dim(); ++k) logvol += std::log(g.step(k));
  Raw out;
  if (!(s.fine > 0)) throw std::runtime_error("quadrature sum vanished; the box misses the integrand's mass");
  out.r.log_value = shift + std::log(s.fine) + logvol;
  out.r.value = std::exp(out.r.log_value);
  double log_coarse = shift + std::log(s.coarse) + logvol + g.dim() * std::log(2.0);
  out.r.error_estimate = out.r.value * std::abs(std::expm1(log_coarse - out.r.log_value));
  out.r.node_count = s.nodes;
  out.boundary = s.boundary_max;
  return out;
}

std::runtime_error truncation_error(double log_boundary, const QuadSpec& spec) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "truncation too small: integrand on the box boundary reaches %.3g of its peak (limit %.3g)",
                std::exp(log_boundary), spec.boundary_rel);
  return std::runtime_error(buf);
}

int odd_at_least(int p) { return p % 2 ? p : p + 1; }

}  // namespace

EvalResult integrate(const LogIntegrand& f, const LogGrid& g, double shift, const QuadSpec& spec) {
  spec.validate();
  Raw raw = integrate_raw(f, g, shift, spec);
  if (raw.boundary > std::log(spec.boundary_rel))
    throw truncation_error(raw.boundary, spec);
  return raw.r;
}

LogGrid auto_grid(const LogIntegrand& f, const Eigen::VectorXd& center, double log_peak, const QuadSpec& spec,
                  double max_half_width) {
  const int d = f.dim();
  LogGrid g;
  g.lo.resize(d);
  g.hi.resize(d);
  g.points.assign(d, odd_at_least(spec.points_per_dim));
  const double drop = -std::log(spec.boundary_rel) + 2.0;
  std::vector<double> u(center.data(), center.data() + d);
  for (int k = 0; k < d; ++k) {
    for (int dir : {-1, 1}) {
      double ext;
      if (spec.truncation) {
        ext = *spec.truncation;
      } else {
        auto below = [&](double s) {
          u[k] = center(k) + dir * s;
          double v = f.log_value(u.data());
          u[k] = center(k);
          return !(v > log_peak - drop);
        };
        double a = 0, b = 0.5;
        while (!below(b) && b < max_half_width) {
          a = b;
          b *= 2;
        }
        if (b >= max_half_width) {
          b = max_half_width;
        } else {
          for (int it = 0; it < 50 && b - a > 1e-9; ++it) {
            double m = 0.5 * (a + b);
            (below(m) ? b : a) = m;
          }
        }
        ext = b;
      }
      (dir < 0 ? g.lo[k] : g.hi[k]) = center(k) + dir * ext;
    }
  }
  return g;
}

EvalResult integrate_auto(const LogIntegrand& f, const Eigen::VectorXd& center, double log_peak, const QuadSpec& spec,
                          double target_step) {
  spec.validate();
  LogGrid base = auto_grid(f, center, log_peak, spec);
  double widen = 1.0;
  const int tries = spec.truncation ? 1 : 8;
  for (int attempt = 0; attempt < tries; ++attempt, widen *= 1.25) {
    LogGrid g = base;
    for (int k = 0; k < g.dim(); ++k) {
      g.lo[k] = center(k) - widen * (center(k) - base.lo[k]);
      g.hi[k] = center(k) + widen * (base.hi[k] - center(k));
      if (target_step > 0)
        g.points[k] = std::max(odd_at_least(spec.points_per_dim),
                               odd_at_least(static_cast<int>(std::ceil((g.hi[k] - g.lo[k]) / target_step)) + 1));
    }
    Raw raw = integrate_raw(f, g, log_peak, spec);
    if (raw.boundary > std::log(spec.boundary_rel)) {
      if (attempt + 1 == tries)
        throw truncation_error(raw.boundary, spec);
      continue;
    }
    if (spec.mode == QuadMode::adaptive) {
      for (int refine = 0; refine < 4 && raw.r.error_estimate > spec.tol * raw.r.value; ++refine) {
        for (auto& p : g.points) p = 2 * p - 1;
        if (g.node_count() > 200'000'000ULL) break;
        raw = integrate_raw(f, g, log_peak, spec);
      }
    }
    return raw.r;
  }
  throw std::logic_error("unreachable");
}

EvalResult psi(const std::vector<double>& mu, const std::vector<double>& t, const QuadSpec& spec) {
  spec.validate();
  const int n = static_cast<int>(t.size()) - 1;
  if (n < 0 || mu.size() != t.size()) throw std::invalid_argument("mu and t must have the same nonzero length");
  if (n > 3) throw std::invalid_argument("deterministic quadrature supports n <= 3");
  if (n == 0) {
    if (!(t[0] > 0)) throw std::invalid_argument("t must be positive");
    EvalResult r;
    r.log_value = mu[0] * std::log(t[0]);
    r.value = std::exp(r.log_value);
    r.node_count = 1;
    return r;
  }
  ExpAffineSum f = whittaker_integrand(mu, t);
  double mean = 0;
  for (double x : t) mean += std::log(x);
  mean /= n + 1;
  Maximum m = maximize(f, Eigen::VectorXd::Constant(f.dim(), mean));
  return integrate_auto(f, m.u, m.log_peak, spec);
}

EvalResult psi_osz(const std::vector<double>& lambda, const std::vector<double>& x, const QuadSpec& spec) {
  if (lambda.size() != x.size() || lambda.empty()) throw std::invalid_argument("lambda and x must have the same nonzero length");
  std::vector<double> mu(lambda.rbegin(), lambda.rend());
  for (double& v : mu) v = -v;
  return psi(mu, x, spec);
}

double predicted_eigenvalue(const std::vector<double>& mu) {
  double s = 0;
  for (double v : mu) s += v * v;
  return 0.5 * s;
}

EigenReport eigen_check(const std::vector<double>& mu, const std::vector<std::vector<double>>& points,
                        const QuadSpec& spec, toda::ApplyOptions fd) {
  if (points.size() < 2) throw std::invalid_argument("eigen_check needs at least two points");
  const int n = static_cast<int>(mu.size()) - 1;
  if (n < 1) throw std::invalid_argument("eigen_check needs n >= 1");
  toda::DiffOp H = toda::toda_hamiltonian(toda::jacobi_char_poly(n));
  EigenReport rep;
  rep.predicted = predicted_eigenvalue(mu);
  double potential = 0;
  for (const auto& pt : points) {
    if (pt.size() != mu.size()) throw std::invalid_argument("point has the wrong dimension");
    EvalResult base = psi(mu, pt, spec);
    if (!(base.value > 1e-280) || !std::isfinite(base.value)) {
      rep.rejected.push_back("psi vanishes or overflows at a sample point");
      continue;
    }
    auto f = [&](const std::vector<double>& t) { return std::exp(psi(mu, t, spec).log_value - base.log_value); };
    rep.points.push_back(pt);
    rep.ratios.push_back(toda::apply_op(H, f, pt, fd));
    double q = 0;
    for (int i = 0; i < n; ++i) q += pt[i + 1] / pt[i];
    potential += q;
  }
  if (rep.ratios.size() < 2) throw std::runtime_error("fewer than two usable sample points");
  for (double r : rep.ratios) rep.mean += r;
  rep.mean /= rep.ratios.size();
  rep.scale = std::max(std::abs(rep.mean), potential / rep.ratios.size());
  for (double r : rep.ratios) rep.spread = std::max(rep.spread, std::abs(r - rep.mean) / rep.scale);
  rep.prediction_error = std::abs(rep.mean - rep.predicted) / std::max(1.0, std::abs(rep.predicted));
  return rep;
}

}  // namespace gcrys::wh
