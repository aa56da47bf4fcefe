#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcrys/algebra.hpp"
#include "gcrys/lie/weyl.hpp"

namespace gcrys::lie {

using alg::RatExpr;
using alg::SqMatrix;

class GroupElt {
 public:
  GroupElt() = default;
  GroupElt(RankSpec r, SqMatrix m);
  static GroupElt identity(RankSpec r) { return GroupElt(r, SqMatrix::identity(r.size())); }
  static GroupElt torus(RankSpec r, const std::vector<RatExpr>& diag);

  RankSpec rank() const { return rank_; }
  const SqMatrix& matrix() const { return m_; }
  const RatExpr& operator()(int i, int j) const { return m_(i, j); }

  bool is_upper_unipotent() const { return m_.is_upper_unitriangular(); }
  bool is_lower_triangular() const { return m_.is_lower_triangular(); }
  bool is_torus() const { return m_.is_diagonal(); }

  GroupElt inverse() const { return GroupElt(rank_, alg::mat_inverse(m_)); }
  GroupElt transpose() const { return GroupElt(rank_, m_.transpose()); }
  std::vector<RatExpr> diagonal() const;

  friend GroupElt operator*(const GroupElt& a, const GroupElt& b);
  friend bool operator==(const GroupElt& a, const GroupElt& b) { return a.m_ == b.m_; }

 private:
  RankSpec rank_;
  SqMatrix m_;
};

enum class GenKind { x, y, alpha_check, x_neg };
enum class WordKind { x, x_neg };

GroupElt gen(RankSpec r, GenKind kind, int i, const RatExpr& a);
GroupElt word_product(WordKind kind, const ReducedWord& w, std::span<const RatExpr> params);

// alpha_i(d) = d_i / d_{i+1} on a diagonal
RatExpr alpha(int i, const std::vector<RatExpr>& diag);
// beta^vee for beta = e_p - e_q (0-based)
GroupElt coroot(RankSpec r, int p, int q, const RatExpr& a);

RatExpr chi_i(const GroupElt& u, int i);
// sum of superdiagonal entries of the unipotent factor; elements outside
// B_-·U raise std::domain_error
RatExpr chi(const GroupElt& u);

struct GaussFactors {
  GroupElt lower;  // pi^-
  GroupElt upper;  // pi^+, unit upper triangular
};
GaussFactors gauss_project(const GroupElt& g);

GroupElt s_bar(RankSpec r, int i);
GroupElt w0_bar(RankSpec r);
GroupElt w0_bar(const ReducedWord& w);

struct BraidResult {
  ReducedWord word;
  std::vector<RatExpr> params;
};
// position is 0-based; m = 2 if the letters at position, position+1 commute,
// m = 3 for an (i, j, i) pattern with |i - j| = 1.
BraidResult braid_move(WordKind kind, const ReducedWord& w, std::span<const RatExpr> params, std::size_t position);

struct Twist {
  GroupElt eta;
  GroupElt tau;
};
Twist twist(const GroupElt& u);
GroupElt twist_inverse(const GroupElt& x);

struct MonomialSplit {
  GroupElt torus_part;
  std::vector<RatExpr> transformed;
};
MonomialSplit monomial_split(const ReducedWord& w, std::span<const RatExpr> params);

// Chart coordinates of u in the x-chart of w: word_product(x, w, result) == u.
// Throws if u is not in the chart.
std::vector<RatExpr> solve_chart(const ReducedWord& w, const GroupElt& u);

}  // namespace gcrys::lie
