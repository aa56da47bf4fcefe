#include <stdexcept>

#include "gcrys/crystal/crystal.hpp"

namespace gcrys::crystal {

// z_{i,j} = t^std_k / prod_{l=1}^{n+1-i} a_{l,k},  k = n+1-i+j
GtArray gt_change_of_variables(const std::vector<RatExpr>& params, const HighestWeight& hw) {
  RankSpec r = hw.rank();
  const int n = r.n;
  if (static_cast<int>(params.size()) != r.longest_length()) throw std::invalid_argument("gt_change_of_variables: wrong parameter count");
  GtArray z(n + 1);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= i; ++j) {
      int k = n + 1 - i + j;
      RatExpr v = std_weight(hw, k);
      for (int l = 1; l <= n + 1 - i; ++l) v /= std_param(params, r, l, k);
      z[i - 1].push_back(v);
    }
  return z;
}

// a_{l,k} = z_{n+2-l, k-l+1} / z_{n+1-l, k-l}
std::vector<RatExpr> params_from_gt(const GtArray& z) {
  const int n = static_cast<int>(z.size()) - 1;
  RankSpec r(n);
  std::vector<RatExpr> a(r.longest_length());
  for (int k = 2; k <= n + 1; ++k)
    for (int l = 1; l < k; ++l) a[standard_index(r, l, k)] = z[n + 1 - l][k - l] / z[n - l][k - l - 1];
  return a;
}

GtArray symbolic_gt(const HighestWeight& hw) {
  const int n = hw.rank().n;
  GtArray z(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) z[i - 1].push_back(RatExpr::variable("z_{" + std::to_string(i) + "," + std::to_string(j) + "}"));
  for (int j = 1; j <= n + 1; ++j) z[n].push_back(std_weight(hw, j));
  return z;
}

RatExpr decoration_gt(const GtArray& z) {
  const int n = static_cast<int>(z.size()) - 1;
  RatExpr F;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b) F += z[a][b] / z[a - 1][b - 1] + z[a - 1][b - 1] / z[a][b - 1];
  return F;
}

// gamma_i = R_{n+2-i} / R_{n+1-i}, R_m = prod_j z_{m,j}, R_0 = 1
std::vector<RatExpr> weight_gt(const GtArray& z) {
  const int n = static_cast<int>(z.size()) - 1;
  auto R = [&](int m) {
    RatExpr p = 1;
    if (m == 0) return p;
    for (const auto& v : z[m - 1]) p *= v;
    return p;
  };
  std::vector<RatExpr> g;
  for (int i = 1; i <= n + 1; ++i) g.push_back(R(n + 2 - i) / R(n + 1 - i));
  return g;
}

}  // namespace gcrys::crystal
