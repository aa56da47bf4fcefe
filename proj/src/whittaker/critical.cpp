#include <cmath>
#include <random>
#include <stdexcept>

#include "gcrys/whittaker/whittaker.hpp"

namespace gcrys::wh {

CriticalPoint critical_point(const std::vector<double>& t, double tol, const Eigen::VectorXd* start) {
  const int n = static_cast<int>(t.size()) - 1;
  if (n < 1) throw std::invalid_argument("critical_point needs n >= 1");
  ExpAffineSum f = decoration_log_form(t);
  Eigen::VectorXd u0;
  if (start) {
    u0 = *start;
  } else {
    double mean = 0;
    for (double x : t) mean += std::log(x);
    u0 = Eigen::VectorXd::Constant(f.dim(), mean / (n + 1));
  }
  Maximum m = maximize(f, u0, tol, 500);
  CriticalPoint cp;
  cp.z.resize(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) cp.z[i - 1].push_back(std::exp(m.u(gt_index(i, j))));
  cp.F = -m.log_peak;
  cp.grad_norm = f.gradient(m.u).norm();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-f.hessian(m.u));
  cp.min_hessian_eigenvalue = es.eigenvalues().minCoeff();
  cp.iterations = m.iterations;
  if (!(cp.min_hessian_eigenvalue > 0)) throw std::runtime_error("Hessian at the critical point is not positive definite");
  return cp;
}

double uniqueness_probe(const std::vector<double>& t, int starts, std::uint64_t seed, double tol) {
  if (starts < 2) throw std::invalid_argument("uniqueness probe needs at least two starts");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> spread(-3.0, 3.0);
  const int n = static_cast<int>(t.size()) - 1;
  const int d = n * (n + 1) / 2;
  double mean = 0;
  for (double x : t) mean += std::log(x);
  mean /= n + 1;
  std::vector<CriticalPoint> found;
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd u(d);
    for (int k = 0; k < d; ++k) u(k) = mean + spread(rng);
    found.push_back(critical_point(t, tol, &u));
  }
  double worst = 0;
  for (const auto& cp : found)
    for (std::size_t i = 0; i < cp.z.size(); ++i)
      for (std::size_t j = 0; j < cp.z[i].size(); ++j) worst = std::max(worst, std::abs(cp.z[i][j] - found[0].z[i][j]));
  return worst;
}

}  // namespace gcrys::wh
