#include <cstdlib>
#include <stdexcept>

#include "gcrys/lie/group.hpp"

namespace gcrys::lie {

BraidResult braid_move(WordKind kind, const ReducedWord& w, std::span<const RatExpr> params, std::size_t position) {
  if (params.size() != w.length()) throw std::invalid_argument("braid_move: parameter count does not match word length");
  const auto& L = w.letters();
  if (position + 1 >= L.size()) throw std::invalid_argument("braid_move: position " + std::to_string(position) + " out of range");
  std::vector<int> letters = L;
  std::vector<RatExpr> out(params.begin(), params.end());
  int i = L[position], j = L[position + 1];
  std::size_t span_len;
  if (std::abs(i - j) >= 2) {
    std::swap(letters[position], letters[position + 1]);
    std::swap(out[position], out[position + 1]);
    span_len = 2;
  } else if (std::abs(i - j) == 1 && position + 2 < L.size() && L[position + 2] == i) {
    const RatExpr &a = params[position], &b = params[position + 1], &c = params[position + 2];
    letters[position] = j;
    letters[position + 1] = i;
    letters[position + 2] = j;
    if (kind == WordKind::x) {
      RatExpr s = a + c;
      out[position] = b * c / s;
      out[position + 1] = s;
      out[position + 2] = a * b / s;
    } else {
      // third parameter parses as a + (b/c); (a+b)/c fails the matrix identity
      out[position] = b * c / (b + a * c);
      out[position + 1] = a * c;
      out[position + 2] = a + b / c;
    }
    span_len = 3;
  } else {
    throw std::invalid_argument("braid_move: no braid pattern at position " + std::to_string(position) + " of " + w.to_string());
  }
  ReducedWord nw(w.rank(), letters);

  // local exact check of the replaced factors
  GenKind g = kind == WordKind::x ? GenKind::x : GenKind::x_neg;
  GroupElt before = GroupElt::identity(w.rank()), after = before;
  for (std::size_t k = position; k < position + span_len; ++k) {
    before = before * gen(w.rank(), g, L[k], params[k]);
    after = after * gen(w.rank(), g, letters[k], out[k]);
  }
  if (!(before == after)) throw std::logic_error("braid_move: matrix identity failed at " + w.to_string());
  return {std::move(nw), std::move(out)};
}

MonomialSplit monomial_split(const ReducedWord& w, std::span<const RatExpr> a) {
  if (a.size() != w.length()) throw std::invalid_argument("monomial_split: parameter count does not match word length");
  const RankSpec r = w.rank();
  const std::size_t k = w.length();
  // torus diagonal of t_{j+1}...t_k, where t_j = alpha_{i_j}^vee(1/b_j)
  std::vector<RatExpr> tail(r.size(), RatExpr(1));
  std::vector<RatExpr> b(k);
  for (std::size_t j = k; j-- > 0;) {
    int i = w[j];
    b[j] = a[j] * alpha(i, tail);
    tail[i - 1] = tail[i - 1] / b[j];
    tail[i] = tail[i] * b[j];
  }
  GroupElt torus = GroupElt::identity(r);
  auto roots = positive_roots(w);
  for (std::size_t j = 0; j < k; ++j) torus = torus * coroot(r, roots[j].first, roots[j].second, a[j]);
  return {torus, b};
}

}  // namespace gcrys::lie
