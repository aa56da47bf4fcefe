#include <algorithm>
#include <stdexcept>

#include "gcrys/lie/group.hpp"

namespace gcrys::lie {

Twist twist(const GroupElt& u) {
  if (!u.is_upper_unipotent()) throw std::invalid_argument("twist: input is not upper unipotent");
  auto f = gauss_project(u * w0_bar(u.rank()));
  return {f.lower, f.upper.inverse()};
}

GroupElt twist_inverse(const GroupElt& x) {
  return gauss_project(w0_bar(x.rank()) * x.inverse()).upper.inverse();
}

namespace {

RatExpr minor(const GroupElt& u, const std::vector<int>& rows, const std::vector<int>& cols) {
  SqMatrix m(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = u(rows[a], cols[b]);
  return alg::mat_det(m);
}

}  // namespace

// Peel x_{i_1}(a_1) off the left. With w the permutation of the remaining
// word (0-based rows), a_1 is the ratio of the minors on rows R+{i}, R+{i+1}
// and columns {w(p) : p in R+{i}}, R = {p < i : w(p) > w(i)}.
std::vector<RatExpr> solve_chart(const ReducedWord& word, const GroupElt& u) {
  const RankSpec r = word.rank();
  Perm w = word.permutation();
  GroupElt v = u;
  std::vector<RatExpr> out;
  for (int letter : word.letters()) {
    int i = letter - 1;
    std::vector<int> R;
    for (int p = 0; p < i; ++p)
      if (w[p] > w[i]) R.push_back(p);
    std::vector<int> cols;
    for (int p : R) cols.push_back(w[p]);
    cols.push_back(w[i]);
    std::sort(cols.begin(), cols.end());
    std::vector<int> top = R, bottom = R;
    top.push_back(i);
    bottom.push_back(i + 1);
    RatExpr den = minor(v, bottom, cols);
    if (den.is_zero()) throw std::domain_error("solve_chart: element is not in the chart of " + word.to_string());
    RatExpr a = minor(v, top, cols) / den;
    out.push_back(a);
    v = gen(r, GenKind::x, letter, -a) * v;
    std::swap(w[i], w[i + 1]);
  }
  if (!v.matrix().is_identity()) throw std::domain_error("solve_chart: element is not in the chart of " + word.to_string());
  return out;
}

}  // namespace gcrys::lie
