#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gcrys/tropical/tropical.hpp"

namespace gcrys::trop {

namespace {

// Leibniz expansion; fine for the sizes used here
MPoly det(const std::vector<std::vector<MPoly>>& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly out;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inv += perm[a] > perm[b];
    MPoly term(inv % 2 ? -1 : 1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= m[r][perm[r]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MPoly alternant(const std::vector<Int>& exps, const std::vector<Var>& x) {
  std::vector<std::vector<MPoly>> m(x.size(), std::vector<MPoly>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m[i][j] = MPoly::variable(x[i]).pow(static_cast<unsigned>(exps[j]));
  return det(m);
}

}  // namespace

MPoly schur_oracle(const std::vector<Int>& lambda, const std::vector<Var>& x) {
  if (lambda.size() != x.size()) throw std::invalid_argument("partition length must match the number of variables");
  if (!is_dominant(lambda) || lambda.back() < 0) throw std::invalid_argument("not a partition");
  std::size_t n = x.size();
  std::vector<Int> top(n), bottom(n);
  for (std::size_t j = 0; j < n; ++j) {
    bottom[j] = static_cast<Int>(n - 1 - j);
    top[j] = lambda[j] + bottom[j];
  }
  auto q = alternant(top, x).divide_exact(alternant(bottom, x));
  if (!q) throw std::logic_error("bialternant quotient is not exact");
  return *q;
}

}  // namespace gcrys::trop
