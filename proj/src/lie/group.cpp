#include "gcrys/lie/group.hpp"

#include <stdexcept>

namespace gcrys::lie {

GroupElt::GroupElt(RankSpec r, SqMatrix m) : rank_(r), m_(std::move(m)) {
  if (static_cast<int>(m_.size()) != r.size())
    throw std::invalid_argument("matrix of size " + std::to_string(m_.size()) + " does not match GL_" + std::to_string(r.size()));
}

GroupElt GroupElt::torus(RankSpec r, const std::vector<RatExpr>& diag) {
  if (static_cast<int>(diag.size()) != r.size()) throw std::invalid_argument("torus element needs n+1 entries");
  for (const auto& d : diag)
    if (d.is_zero()) throw std::invalid_argument("torus element with zero entry");
  return GroupElt(r, SqMatrix::diag(diag));
}

std::vector<RatExpr> GroupElt::diagonal() const {
  std::vector<RatExpr> d;
  for (int i = 0; i < rank_.size(); ++i) d.push_back(m_(i, i));
  return d;
}

GroupElt operator*(const GroupElt& a, const GroupElt& b) {
  if (!(a.rank_ == b.rank_)) throw std::invalid_argument("product of elements of different rank");
  return GroupElt(a.rank_, alg::mat_mul(a.m_, b.m_));
}

GroupElt gen(RankSpec r, GenKind kind, int i, const RatExpr& a) {
  if (i < 1 || i > r.n) throw std::invalid_argument("Dynkin index " + std::to_string(i) + " out of range 1.." + std::to_string(r.n));
  SqMatrix m = SqMatrix::identity(r.size());
  int p = i - 1, q = i;
  switch (kind) {
    case GenKind::x:
      m(p, q) = a;
      break;
    case GenKind::y:
      m(q, p) = a;
      break;
    case GenKind::alpha_check:
      if (a.is_zero()) throw std::invalid_argument("alpha_check with zero parameter");
      m(p, p) = a;
      m(q, q) = a.inverse();
      break;
    case GenKind::x_neg:
      if (a.is_zero()) throw std::invalid_argument("x_neg with zero parameter");
      m(p, p) = a.inverse();
      m(q, p) = 1;
      m(q, q) = a;
      break;
  }
  return GroupElt(r, std::move(m));
}

GroupElt word_product(WordKind kind, const ReducedWord& w, std::span<const RatExpr> params) {
  if (params.size() != w.length())
    throw std::invalid_argument("word " + w.to_string() + " has length " + std::to_string(w.length()) + " but " +
                                std::to_string(params.size()) + " parameters were given");
  GenKind g = kind == WordKind::x ? GenKind::x : GenKind::x_neg;
  GroupElt acc = GroupElt::identity(w.rank());
  for (std::size_t k = 0; k < w.length(); ++k) acc = acc * gen(w.rank(), g, w[k], params[k]);
  return acc;
}

RatExpr alpha(int i, const std::vector<RatExpr>& diag) { return diag.at(i - 1) / diag.at(i); }

GroupElt coroot(RankSpec r, int p, int q, const RatExpr& a) {
  std::vector<RatExpr> d(r.size(), RatExpr(1));
  d.at(p) = a;
  d.at(q) = a.inverse();
  return GroupElt::torus(r, d);
}

RatExpr chi_i(const GroupElt& u, int i) {
  if (u.is_upper_unipotent()) return u(i - 1, i);
  return gauss_project(u).upper(i - 1, i);
}

RatExpr chi(const GroupElt& u) {
  const GroupElt up = u.is_upper_unipotent() ? u : gauss_project(u).upper;
  RatExpr s;
  for (int i = 0; i + 1 < u.rank().size(); ++i) s += up(i, i + 1);
  return s;
}

GaussFactors gauss_project(const GroupElt& g) {
  const int N = g.rank().size();
  SqMatrix m = g.matrix();
  SqMatrix L(N), U = SqMatrix::identity(N);
  RatExpr prev = 1;
  for (int k = 0; k < N; ++k) {
    RatExpr dk = m(k, k);
    if (dk.is_zero())
      throw std::domain_error("not in B_-*U: leading principal minor of order " + std::to_string(k + 1) + " vanishes");
    for (int i = k; i < N; ++i) L(i, k) = m(i, k) / prev;
    for (int j = k + 1; j < N; ++j) U(k, j) = m(k, j) / dk;
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) m(i, j) = (m(i, j) * dk - m(i, k) * m(k, j)) / prev;
    prev = dk;
  }
  return {GroupElt(g.rank(), std::move(L)), GroupElt(g.rank(), std::move(U))};
}

GroupElt s_bar(RankSpec r, int i) {
  return gen(r, GenKind::x, i, -1) * gen(r, GenKind::y, i, 1) * gen(r, GenKind::x, i, -1);
}

GroupElt w0_bar(const ReducedWord& w) {
  if (!w.is_longest()) throw std::invalid_argument("word " + w.to_string() + " is not a reduced word for w0");
  GroupElt acc = GroupElt::identity(w.rank());
  for (int i : w.letters()) acc = acc * s_bar(w.rank(), i);
  return acc;
}

GroupElt w0_bar(RankSpec r) { return w0_bar(longest_word_lex(r)); }

}  // namespace gcrys::lie
