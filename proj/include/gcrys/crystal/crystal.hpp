#pragma once

#include <string>
#include <vector>

#include "gcrys/lie/group.hpp"

namespace gcrys::crystal {

using alg::RatExpr;
using alg::Var;
using lie::GroupElt;
using lie::RankSpec;
using lie::ReducedWord;

// Highest weight t = diag(t_1, ..., t_{n+1}); the crystal X_t consists of
// u_1 t w0 u_2 in B_-.
struct HighestWeight {
  std::vector<RatExpr> t;
  bool totally_positive = false;

  static HighestWeight symbolic(RankSpec r);  // t_1..t_{n+1}
  static HighestWeight of(std::vector<RatExpr> t);
  RankSpec rank() const { return RankSpec(static_cast<int>(t.size()) - 1); }
  GroupElt matrix() const;
  GroupElt reversed_matrix() const;  // diag(t_{n+1}, ..., t_1)
};

struct CrystalPoint {
  HighestWeight hw;
  ReducedWord word;
  std::vector<RatExpr> params;
  GroupElt x;  // eta(x_word(params)) * diag(t_{n+1}, ..., t_1), lower triangular
};

struct CrystalMaps {
  std::vector<RatExpr> gamma;
  std::vector<RatExpr> phi;  // phi[i-1] = phi_i
  std::vector<RatExpr> eps;
  RatExpr F;
};

CrystalPoint build_point(const HighestWeight& hw, const ReducedWord& word, std::vector<RatExpr> params);
CrystalMaps maps_of(const CrystalPoint& p);
// closed-form weight prod_k beta_k^vee(a_k) times the reversed torus
std::vector<RatExpr> weight_formula(const ReducedWord& word, const std::vector<RatExpr>& params, const HighestWeight& hw);
CrystalPoint e_action(const CrystalPoint& p, int i, const RatExpr& c);

// u_1 and u_2 with x = u_1 t w0 u_2
struct Factorization {
  GroupElt u1, u2;
};
Factorization factor_point(const CrystalPoint& p);

// --- standard word (n, n-1, ..., 1, n, ..., 2, ..., n) and its labels ---
// Parameters are a_{i,j}, 1 <= i < j <= n+1, and the weight labels are
// t^std_j = hw.t[n+1-j] (0-based), so that t = diag(t^std_{n+1}, ..., t^std_1).
std::size_t standard_index(RankSpec r, int i, int j);
std::vector<RatExpr> standard_params(RankSpec r);  // symbols a_{i,j} in word order
RatExpr std_param(const std::vector<RatExpr>& params, RankSpec r, int i, int j);
RatExpr std_weight(const HighestWeight& hw, int j);

RatExpr decoration_closed_form(const ReducedWord& word, const std::vector<RatExpr>& params, const HighestWeight& hw);

// Gelfand-Tsetlin coordinates: z[i-1][j-1] = z_{i,j}, 1 <= j <= i <= n+1,
// with the top row z_{n+1,j} = t^std_j.
using GtArray = std::vector<std::vector<RatExpr>>;
GtArray gt_change_of_variables(const std::vector<RatExpr>& params, const HighestWeight& hw);
std::vector<RatExpr> params_from_gt(const GtArray& z);
GtArray symbolic_gt(const HighestWeight& hw);  // free symbols z_{i,j} below the top row
RatExpr decoration_gt(const GtArray& z);
std::vector<RatExpr> weight_gt(const GtArray& z);  // gamma in diagonal order

// det (x_j / y_k) dy_k/dx_j
RatExpr dlog_jacobian(const std::vector<RatExpr>& outputs, const std::vector<Var>& inputs);

std::string to_json(const CrystalPoint& p);
CrystalPoint point_from_json(const std::string& text);

namespace detail {
// x_i(a) x x_i(a') with a' chosen to keep the result in B_-
GroupElt u_action(const GroupElt& x, int i, const RatExpr& a);
}

}  // namespace gcrys::crystal
