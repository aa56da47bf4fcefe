#include <stdexcept>

#include "gcrys/crystal/crystal.hpp"

namespace gcrys::crystal {

CrystalMaps maps_of(const CrystalPoint& p) {
  const int N = p.hw.rank().size();
  CrystalMaps m;
  m.gamma = p.x.diagonal();
  for (int i = 1; i < N; ++i) {
    const RatExpr& sub = p.x(i, i - 1);
    m.phi.push_back(sub / p.x(i - 1, i - 1));
    m.eps.push_back(sub / p.x(i, i));
  }
  auto f = factor_point(p);
  m.F = lie::chi(f.u1) + lie::chi(f.u2);
  return m;
}

std::vector<RatExpr> weight_formula(const ReducedWord& word, const std::vector<RatExpr>& params, const HighestWeight& hw) {
  auto split = lie::monomial_split(word, params);
  std::vector<RatExpr> g = split.torus_part.diagonal();
  const std::size_t N = g.size();
  for (std::size_t k = 0; k < N; ++k) g[k] *= hw.t[N - 1 - k];
  return g;
}

RatExpr decoration_closed_form(const ReducedWord& word, const std::vector<RatExpr>& params, const HighestWeight& hw) {
  RankSpec r = word.rank();
  if (!(word == lie::standard_word(r))) throw std::invalid_argument("decoration_closed_form: only the standard word is supported");
  const int N = r.size();
  auto a = [&](int i, int j) { return std_param(params, r, i, j); };
  RatExpr F;
  for (int j = 2; j <= N; ++j)
    for (int i = 1; i < j; ++i) {
      F += a(i, j);
      RatExpr term = std_weight(hw, j) / (std_weight(hw, j - 1) * a(i, j));
      for (int l = 1; l < i; ++l) term *= a(l, j - 1) / a(l, j);
      F += term;
    }
  return F;
}

}  // namespace gcrys::crystal
