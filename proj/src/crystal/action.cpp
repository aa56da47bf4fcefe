#include <stdexcept>

#include "gcrys/crystal/crystal.hpp"

namespace gcrys::crystal {

namespace detail {

GroupElt u_action(const GroupElt& x, int i, const RatExpr& a) {
  RankSpec r = x.rank();
  RatExpr d = x(i - 1, i - 1) + a * x(i, i - 1);
  if (d.is_zero()) throw std::domain_error("u_action: result leaves B_-");
  RatExpr ap = -a * x(i, i) / d;
  return lie::gen(r, lie::GenKind::x, i, a) * x * lie::gen(r, lie::GenKind::x, i, ap);
}

}  // namespace detail

CrystalPoint e_action(const CrystalPoint& p, int i, const RatExpr& c) {
  RankSpec r = p.hw.rank();
  if (i < 1 || i > r.n) throw std::invalid_argument("e_action: Dynkin index out of range");
  if (c.is_zero()) throw std::invalid_argument("e_action: c = 0");
  const RatExpr& sub = p.x(i, i - 1);
  if (sub.is_zero()) throw std::domain_error("e_action: phi_i or eps_i vanishes at this point");
  RatExpr phi = sub / p.x(i - 1, i - 1), eps = sub / p.x(i, i);
  GroupElt xn = lie::gen(r, lie::GenKind::x, i, (c - 1) / phi) * p.x * lie::gen(r, lie::GenKind::x, i, (c.inverse() - 1) / eps);
  if (!xn.is_lower_triangular()) throw std::logic_error("e_action: result is not lower triangular");
  GroupElt u = lie::twist_inverse(xn * p.hw.reversed_matrix().inverse());
  std::vector<RatExpr> params = lie::solve_chart(p.word, u);
  return {p.hw, p.word, std::move(params), std::move(xn)};
}

}  // namespace gcrys::crystal
