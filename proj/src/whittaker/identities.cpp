#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gcrys/whittaker/whittaker.hpp"

namespace gcrys::wh {

namespace {

class FnIntegrand : public LogIntegrand {
 public:
  FnIntegrand(int d, std::function<double(const double*)> fn) : d_(d), fn_(std::move(fn)) {}
  int dim() const override { return d_; }
  double log_value(const double* u) const override { return fn_(u); }

 private:
  int d_;
  std::function<double(const double*)> fn_;
};

// power-law tails need a step fixed in log coordinates rather than a point count
constexpr double kOuterStep = 0.3;
// the nested outer integral only targets ~1e-4; its own boundary cut is looser
constexpr double kOuterBoundary = 1e-12;

EvalResult integrate_1d(const ExpAffineSum& f, const QuadSpec& spec) {
  Maximum m = maximize(f, Eigen::VectorXd::Zero(1));
  return integrate_auto(f, m.u, m.log_peak, spec, kOuterStep);
}

EvalResult integrate_outer(const std::function<double(const double*)>& logf, const QuadSpec& spec) {
  FnIntegrand f(2, logf);
  auto wrapped = [&](const Eigen::VectorXd& u) { return logf(u.data()); };
  Maximum m = maximize_numeric(wrapped, Eigen::VectorXd::Zero(2));
  QuadSpec outer = spec;
  outer.boundary_rel = std::max(spec.boundary_rel, kOuterBoundary);
  return integrate_auto(f, m.u, m.log_peak, outer, kOuterStep);
}


}  // namespace

IdentityReport cauchy_check(const std::vector<double>& lambda, const std::vector<double>& nu, double s,
                            const QuadSpec& spec) {
  const std::size_t n = lambda.size();
  if (n < 1 || n > 2 || nu.size() != n) throw std::invalid_argument("cauchy_check supports n = 1, 2 with |lambda| = |nu|");
  if (!(s > 0)) throw std::invalid_argument("s must be positive");
  double log_rhs = 0, total = 0;
  for (double a : nu)
    for (double b : lambda) {
      if (!(a + b > 0)) throw std::invalid_argument("hypothesis violated: need lambda_i + nu_j > 0");
      log_rhs += std::lgamma(a + b);
    }
  for (std::size_t i = 0; i < n; ++i) total += nu[i] + lambda[i];
  log_rhs -= total * std::log(s);

  IdentityReport rep;
  rep.rhs = std::exp(log_rhs);
  EvalResult lhs;
  if (n == 1) {
    // int exp(-s e^{-u}) e^{-(nu+lambda) u} du
    ExpAffineSum f(1);
    f.add_linear(0, -total);
    f.add_exp({{{0, -1.0}}, std::log(s)});
    lhs = integrate_1d(f, spec);
  } else {
    QuadSpec inner = spec;
    inner.parallel = false;
    auto logf = [&, inner](const double* u) {
      std::vector<double> x{std::exp(u[0]), std::exp(u[1])};
      return -s * std::exp(-u[1]) + psi_osz(nu, x, inner).log_value + psi_osz(lambda, x, inner).log_value;
    };
    lhs = integrate_outer(logf, spec);
  }
  rep.lhs = lhs.value;
  rep.node_count = lhs.node_count;
  rep.rel_error = std::abs(std::expm1(lhs.log_value - log_rhs));
  return rep;
}

IdentityReport pieri_check(double gamma, const std::vector<double>& lambda, const std::vector<double>& y,
                           const QuadSpec& spec) {
  const std::size_t n = lambda.size();
  if (n < 1 || n > 2 || y.size() != n) throw std::invalid_argument("pieri_check supports n = 1, 2 with |lambda| = |y|");
  double log_gamma = 0, log_y = 0;
  for (double l : lambda) {
    if (!(gamma - l > 0)) throw std::invalid_argument("hypothesis violated: need gamma - lambda_i > 0");
    log_gamma += std::lgamma(gamma - l);
  }
  for (double v : y) {
    if (!(v > 0)) throw std::invalid_argument("y must be positive");
    log_y += std::log(v);
  }
  // the Gamma(gamma - lambda_i) form holds for the Whittaker function of -lambda
  std::vector<double> neg(lambda);
  for (double& v : neg) v = -v;
  IdentityReport rep;
  EvalResult lhs;
  double log_rhs;
  if (n == 1) {
    // (y/x)^gamma e^{-y/x} x^{lambda}
    ExpAffineSum f(1);
    f.add_constant(gamma * log_y);
    f.add_linear(0, -gamma + lambda[0]);
    f.add_exp({{{0, -1.0}}, log_y});
    lhs = integrate_1d(f, spec);
    log_rhs = log_gamma + lambda[0] * log_y;
  } else {
    QuadSpec inner = spec;
    inner.parallel = false;
    auto logf = [&, inner](const double* u) {
      std::vector<double> x{std::exp(u[0]), std::exp(u[1])};
      double q = gamma * (log_y - u[0] - u[1]) - y[0] * std::exp(-u[0]) - y[1] * std::exp(-u[1]) - std::exp(u[1]) / y[0];
      return q + psi_osz(neg, x, inner).log_value;
    };
    lhs = integrate_outer(logf, spec);
    log_rhs = log_gamma + psi_osz(neg, y, spec).log_value;
  }
  rep.lhs = lhs.value;
  rep.rhs = std::exp(log_rhs);
  rep.node_count = lhs.node_count;
  rep.rel_error = std::abs(std::expm1(lhs.log_value - log_rhs));
  return rep;
}

}  // namespace gcrys::wh
