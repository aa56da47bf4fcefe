#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcrys/toda/toda.hpp"

namespace gcrys::wh {

// log of a positive integrand on R^d
class LogIntegrand {
 public:
  virtual ~LogIntegrand() = default;
  virtual int dim() const = 0;
  virtual double log_value(const double* u) const = 0;
};

// exp(b + a.u), a sparse
struct AffineExp {
  std::vector<std::pair<int, double>> a;
  double b = 0;
};

// log f(u) = c0 + c.u - sum_k exp(b_k + a_k.u); concave
class ExpAffineSum : public LogIntegrand {
 public:
  explicit ExpAffineSum(int d) : c_(Eigen::VectorXd::Zero(d)) {}

  int dim() const override { return static_cast<int>(c_.size()); }
  double log_value(const double* u) const override;

  void add_constant(double v) { c0_ += v; }
  void add_linear(int k, double v) { c_(k) += v; }
  void add_exp(AffineExp e);

  double constant() const { return c0_; }
  const Eigen::VectorXd& linear() const { return c_; }
  const std::vector<AffineExp>& exps() const { return terms_; }

  double value(const Eigen::VectorXd& u) const { return log_value(u.data()); }
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const;

 private:
  double c0_ = 0;
  Eigen::VectorXd c_;
  std::vector<AffineExp> terms_;
};

struct Maximum {
  Eigen::VectorXd u;
  double log_peak = 0;
  double grad_norm = 0;
  int iterations = 0;
};

// damped Newton; throws std::runtime_error when the maximum does not exist or is not reached
Maximum maximize(const ExpAffineSum& f, Eigen::VectorXd start, double tol = 1e-12, int max_iter = 200);

// Newton with finite-difference derivatives, for concave functions without a closed form
Maximum maximize_numeric(const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd start,
                         double tol = 1e-7, int max_iter = 100);

// tensor grid: points[k] nodes on [lo[k], hi[k]], points[k] odd
struct LogGrid {
  std::vector<double> lo, hi;
  std::vector<int> points;

  int dim() const { return static_cast<int>(lo.size()); }
  double step(int k) const { return (hi[k] - lo[k]) / (points[k] - 1); }
  double node(int k, int i) const { return lo[k] + i * step(k); }
  std::uint64_t node_count() const;
};

// Kernel output, sums of exp(log f - shift).  `coarse` uses every other node.
struct KernelSums {
  double fine = 0;
  double coarse = 0;
  double boundary_max = -1e300;  // max of log f - shift over boundary nodes
  std::uint64_t nodes = 0;
};

enum class Precision { double_, extended };

KernelSums trapezoid_serial(const LogIntegrand& f, const LogGrid& g, double shift, Precision p = Precision::double_);
KernelSums trapezoid_omp(const LogIntegrand& f, const LogGrid& g, double shift, Precision p = Precision::double_);

enum class QuadMode { tensor, adaptive };

struct QuadSpec {
  int points_per_dim = 41;
  std::optional<double> truncation;  // fixed half-width around the maximiser; automatic when empty
  QuadMode mode = QuadMode::tensor;
  Precision precision = Precision::double_;
  double boundary_rel = 1e-18;  // box edge: integrand below this fraction of the peak
  double tol = 1e-10;           // adaptive mode target
  bool parallel = true;

  void validate() const;
};

struct EvalResult {
  double value = 0;
  double log_value = 0;  // log(value), finite even when value over/underflows
  double error_estimate = 0;
  std::uint64_t node_count = 0;
};

EvalResult integrate(const LogIntegrand& f, const LogGrid& g, double shift, const QuadSpec& spec);

// Box around `center`: along each axis the extent where log f has dropped by
// log(1/boundary_rel) + margin, located by bisection.  Widened and retried by
// integrate_auto if the boundary check fails.
LogGrid auto_grid(const LogIntegrand& f, const Eigen::VectorXd& center, double log_peak, const QuadSpec& spec,
                  double max_half_width = 80);

// integrate on an automatic box; per-dimension points from spec, or from a target step if > 0
EvalResult integrate_auto(const LogIntegrand& f, const Eigen::VectorXd& center, double log_peak, const QuadSpec& spec,
                          double target_step = 0);

// --- Whittaker function in Gelfand-Tsetlin coordinates ---
// Variables u_{i,j} = log z_{i,j}, 1 <= j <= i <= n, in row-major order; the
// top row z_{n+1,j} = t_j.
int gt_index(int i, int j);
ExpAffineSum whittaker_integrand(const std::vector<double>& mu, const std::vector<double>& t);

EvalResult psi(const std::vector<double>& mu, const std::vector<double>& t, const QuadSpec& spec = {});
// Psi^n_lambda(x) = psi(reverse(-lambda), x)
EvalResult psi_osz(const std::vector<double>& lambda, const std::vector<double>& x, const QuadSpec& spec = {});

struct EigenReport {
  std::vector<std::vector<double>> points;
  std::vector<double> ratios;  // (H psi / psi)(point)
  std::vector<std::string> rejected;
  double mean = 0;
  double spread = 0;  // max |ratio - mean| / scale
  double scale = 0;   // max(|mean|, mean potential sum q_i)
  double predicted = 0;
  double prediction_error = 0;  // |mean - predicted| / max(1, |predicted|)
};

// eigenvalue prediction 1/2 (mu, mu), pinned against the GL_2 Bessel closed form
double predicted_eigenvalue(const std::vector<double>& mu);

EigenReport eigen_check(const std::vector<double>& mu, const std::vector<std::vector<double>>& points,
                        const QuadSpec& spec = {}, toda::ApplyOptions fd = {});

struct IdentityReport {
  double lhs = 0;
  double rhs = 0;
  double rel_error = 0;
  std::uint64_t node_count = 0;
};

// int e^{-s/x_n} Psi_nu(x) Psi_lambda(x) prod dx_i/x_i  vs  s^{-sum(nu+lambda)} prod Gamma(nu_i + lambda_j)
IdentityReport cauchy_check(const std::vector<double>& lambda, const std::vector<double>& nu, double s,
                            const QuadSpec& spec = {});
// int Q_gamma(x, y) P(x) prod dx_i/x_i  vs  prod Gamma(gamma - lambda_i) P(y), P = psi_osz(-lambda, .);
// with psi_osz(lambda, .) itself the Gamma factors read Gamma(gamma + lambda_i)
IdentityReport pieri_check(double gamma, const std::vector<double>& lambda, const std::vector<double>& y,
                           const QuadSpec& spec = {});

// --- critical point of the decoration ---
struct CriticalPoint {
  std::vector<std::vector<double>> z;  // z[i-1][j-1]
  double F = 0;
  double grad_norm = 0;  // in log coordinates
  double min_hessian_eigenvalue = 0;
  int iterations = 0;
};

ExpAffineSum decoration_log_form(const std::vector<double>& t);  // -F in log coordinates
CriticalPoint critical_point(const std::vector<double>& t, double tol = 1e-12, const Eigen::VectorXd* start = nullptr);
// max distance (in z) between minimisers reached from `starts` random starting points
double uniqueness_probe(const std::vector<double>& t, int starts, std::uint64_t seed, double tol = 1e-12);

}  // namespace gcrys::wh
