#include <cmath>
#include <stdexcept>

#include "gcrys/whittaker/whittaker.hpp"

namespace gcrys::wh {

void ExpAffineSum::add_exp(AffineExp e) {
  for (const auto& [k, v] : e.a)
    if (k < 0 || k >= dim()) throw std::out_of_range("affine term index out of range");
  terms_.push_back(std::move(e));
}

double ExpAffineSum::log_value(const double* u) const {
  double s = c0_;
  for (int k = 0; k < dim(); ++k) s += c_(k) * u[k];
  for (const auto& t : terms_) {
    double x = t.b;
    for (const auto& [k, v] : t.a) x += v * u[k];
    s -= std::exp(x);
  }
  return s;
}

Eigen::VectorXd ExpAffineSum::gradient(const Eigen::VectorXd& u) const {
  Eigen::VectorXd g = c_;
  for (const auto& t : terms_) {
    double x = t.b;
    for (const auto& [k, v] : t.a) x += v * u(k);
    double w = std::exp(x);
    for (const auto& [k, v] : t.a) g(k) -= w * v;
  }
  return g;
}

Eigen::MatrixXd ExpAffineSum::hessian(const Eigen::VectorXd& u) const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim(), dim());
  for (const auto& t : terms_) {
    double x = t.b;
    for (const auto& [k, v] : t.a) x += v * u(k);
    double w = std::exp(x);
    for (const auto& [k, v] : t.a)
      for (const auto& [l, z] : t.a) h(k, l) -= w * v * z;
  }
  return h;
}

Maximum maximize(const ExpAffineSum& f, Eigen::VectorXd u, double tol, int max_iter) {
  const int d = f.dim();
  if (u.size() != d) throw std::invalid_argument("start point has the wrong dimension");
  Maximum m;
  if (d == 0) {
    m.u = u;
    m.log_peak = f.value(u);
    return m;
  }
  double val = f.value(u);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd g = f.gradient(u);
    Eigen::MatrixXd H = -f.hessian(u);
    double scale = 1 + f.linear().cwiseAbs().maxCoeff() + H.diagonal().cwiseAbs().maxCoeff();
    m.grad_norm = g.norm();
    m.iterations = it;
    if (g.lpNorm<Eigen::Infinity>() <= tol * scale) break;
    Eigen::LLT<Eigen::MatrixXd> llt(H);
    Eigen::VectorXd step;
    if (llt.info() == Eigen::Success) {
      step = llt.solve(g);
    } else {
      double tau = 1e-8 * scale;
      for (;;) {
        Eigen::LLT<Eigen::MatrixXd> reg(H + tau * Eigen::MatrixXd::Identity(d, d));
        if (reg.info() == Eigen::Success) {
          step = reg.solve(g);
          break;
        }
        tau *= 10;
      }
    }
    // flat directions (tiny curvature) give huge Newton steps; cap them
    if (double len = step.lpNorm<Eigen::Infinity>(); len > 8) step *= 8 / len;
    double slope = g.dot(step);
    double alpha = 1;
    bool accepted = false;
    while (alpha > 1e-14) {
      Eigen::VectorXd trial = u + alpha * step;
      double tv = f.value(trial);
      if (std::isfinite(tv) && tv >= val + 1e-4 * alpha * slope) {
        u = trial;
        val = tv;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (u.lpNorm<Eigen::Infinity>() > 1e3) throw std::runtime_error("log integrand has no maximum (integral diverges)");
    if (!accepted) {
      // no further progress at working precision
      if (g.lpNorm<Eigen::Infinity>() <= 1e-6 * scale) break;
      throw std::runtime_error("maximisation stalled with gradient norm " + std::to_string(g.norm()));
    }
    m.iterations = it + 1;
  }
  m.u = u;
  m.log_peak = val;
  m.grad_norm = f.gradient(u).norm();
  double scale = 1 + f.linear().cwiseAbs().maxCoeff() + f.hessian(u).diagonal().cwiseAbs().maxCoeff();
  if (m.grad_norm > 1e-6 * scale) throw std::runtime_error("maximisation did not converge within the iteration budget");
  return m;
}

Maximum maximize_numeric(const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd u, double tol,
                         int max_iter) {
  const int d = static_cast<int>(u.size());
  const double h = 1e-3;
  Maximum m;
  double val = f(u);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd g(d);
    Eigen::MatrixXd H(d, d);
    auto at = [&](int k, double a, int l, double b) {
      Eigen::VectorXd v = u;
      v(k) += a;
      v(l) += b;
      return f(v);
    };
    for (int k = 0; k < d; ++k) {
      double fp = at(k, h, k, 0), fm = at(k, -h, k, 0);
      g(k) = (fp - fm) / (2 * h);
      H(k, k) = (fp - 2 * val + fm) / (h * h);
      for (int l = 0; l < k; ++l) {
        H(k, l) = H(l, k) = (at(k, h, l, h) - at(k, h, l, -h) - at(k, -h, l, h) + at(k, -h, l, -h)) / (4 * h * h);
      }
    }
    m.grad_norm = g.norm();
    m.iterations = it;
    if (g.lpNorm<Eigen::Infinity>() <= tol) break;
    Eigen::LLT<Eigen::MatrixXd> llt(-H);
    Eigen::VectorXd step = llt.info() == Eigen::Success ? Eigen::VectorXd(llt.solve(g)) : Eigen::VectorXd(g);
    if (double len = step.lpNorm<Eigen::Infinity>(); len > 4) step *= 4 / len;
    double alpha = 1;
    while (alpha > 1e-10) {
      Eigen::VectorXd trial = u + alpha * step;
      double tv = f(trial);
      if (std::isfinite(tv) && tv >= val) {
        u = trial;
        val = tv;
        break;
      }
      alpha *= 0.5;
    }
    if (alpha <= 1e-10) break;
  }
  m.u = u;
  m.log_peak = val;
  return m;
}

std::uint64_t LogGrid::node_count() const {
  std::uint64_t n = 1;
  for (int p : points) n *= static_cast<std::uint64_t>(p);
  return n;
}

int gt_index(int i, int j) { return i * (i - 1) / 2 + (j - 1); }

namespace {

// add coefficient v of L_k = sum_j u_{k,j} (a constant for the top row)
void add_row(ExpAffineSum& f, int n, int k, double v, const std::vector<double>& logt) {
  if (k == 0 || v == 0) return;
  if (k == n + 1) {
    for (double lt : logt) f.add_constant(v * lt);
    return;
  }
  for (int j = 1; j <= k; ++j) f.add_linear(gt_index(k, j), v);
}

// exp(u_{i1,j1} - u_{i0,j0})
AffineExp ratio(int n, int i1, int j1, int i0, int j0, const std::vector<double>& logt) {
  AffineExp e;
  if (i1 == n + 1)
    e.b += logt[j1 - 1];
  else
    e.a.emplace_back(gt_index(i1, j1), 1.0);
  e.a.emplace_back(gt_index(i0, j0), -1.0);
  return e;
}

ExpAffineSum gt_form(const std::vector<double>& mu, const std::vector<double>& t) {
  const int n = static_cast<int>(t.size()) - 1;
  if (n < 0) throw std::invalid_argument("empty t");
  if (mu.size() != t.size()) throw std::invalid_argument("mu and t must have the same length");
  std::vector<double> logt;
  for (double x : t) {
    if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("t must be positive");
    logt.push_back(std::log(x));
  }
  ExpAffineSum f(n * (n + 1) / 2);
  for (int i = 1; i <= n + 1; ++i) {
    add_row(f, n, n + 2 - i, mu[i - 1], logt);
    add_row(f, n, n + 1 - i, -mu[i - 1], logt);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b) {
      f.add_exp(ratio(n, a + 1, b + 1, a, b, logt));
      // z_{a,b} / z_{a+1,b}
      AffineExp e;
      e.a.emplace_back(gt_index(a, b), 1.0);
      if (a + 1 == n + 1)
        e.b -= logt[b - 1];
      else
        e.a.emplace_back(gt_index(a + 1, b), -1.0);
      f.add_exp(std::move(e));
    }
  return f;
}

}  // namespace

ExpAffineSum whittaker_integrand(const std::vector<double>& mu, const std::vector<double>& t) { return gt_form(mu, t); }

ExpAffineSum decoration_log_form(const std::vector<double>& t) { return gt_form(std::vector<double>(t.size(), 0.0), t); }

}  // namespace gcrys::wh
