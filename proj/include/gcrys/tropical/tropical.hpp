#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcrys/algebra.hpp"

namespace gcrys::trop {

using alg::MPoly;
using alg::RatExpr;
using alg::Var;
using Int = std::int64_t;

// Subtraction-free expression: variables, positive rational constants, +, *, /.
class PosExpr {
 public:
  enum class Kind { var, constant, sum, product, quotient };

  static PosExpr variable(Var v);
  static PosExpr constant(const alg::Scalar& c);  // c > 0
  static PosExpr sum(std::vector<PosExpr> terms);
  static PosExpr product(std::vector<PosExpr> factors);
  static PosExpr quotient(PosExpr num, PosExpr den);

  // infix with + * / ^ and parentheses; any '-' is rejected
  static PosExpr parse(const std::string& text);
  // requires nonnegative coefficients in the reduced numerator and denominator
  static PosExpr from_ratexpr(const RatExpr& e);

  Kind kind() const;
  Var var() const;
  const alg::Scalar& constant_value() const;
  const std::vector<PosExpr>& children() const;

  RatExpr to_ratexpr() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit PosExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// a . x + c
struct LinForm {
  std::map<Var, Int> coef;
  Int constant = 0;

  LinForm operator+(const LinForm& o) const;
  LinForm operator-(const LinForm& o) const;
  LinForm operator-() const;
  Int eval(const std::unordered_map<Var, Int>& env) const;
  std::string to_string() const;
  friend auto operator<=>(const LinForm&, const LinForm&) = default;
};

// min(num) - min(den); a single-element den is shifted into num so that den = {0}
struct TropNormal {
  std::set<LinForm> num, den;

  Int eval(const std::unordered_map<Var, Int>& env) const;
  std::string to_string() const;
  friend bool operator==(const TropNormal&, const TropNormal&) = default;
};

// Min-plus expression tree: variables, integer constants, min, +, -.
class TropExpr {
 public:
  enum class Kind { var, constant, min, add, sub };

  static TropExpr variable(Var v);
  static TropExpr constant(Int c);
  static TropExpr min(std::vector<TropExpr> args);
  static TropExpr add(std::vector<TropExpr> args);
  static TropExpr sub(TropExpr a, TropExpr b);
  // "min(A+D+1, 2*D+1) - min(A, D+1)"
  static TropExpr parse(const std::string& text);

  Kind kind() const;
  Int eval(const std::unordered_map<Var, Int>& env) const;
  TropExpr substitute(Var v, Int value) const;
  TropNormal normal_form() const;
  std::string to_string() const;  // of the normal form

  // equal normal forms
  friend bool operator==(const TropExpr& a, const TropExpr& b) { return a.normal_form() == b.normal_form(); }

 private:
  struct Node;
  explicit TropExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// A, B, t_3 -> T_3, a_{1,2} -> A_{1,2}
Var trop_var(Var v);
TropExpr tropicalize(const PosExpr& e);
TropExpr tropicalize(const RatExpr& e);  // via PosExpr::from_ratexpr

// rows[0] = T (n+1 entries), rows[r] has n+1-r entries
struct GTPattern {
  std::vector<std::vector<Int>> rows;

  int rank() const { return static_cast<int>(rows.size()) - 1; }
  bool interlacing() const;
  std::string to_string() const;  // "2 1 0 | 2 0 | 1"
  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;
};

// Tropicalized data of the standard-word chart of GL_{n+1}, with
// parameter order as in crystal::standard_params.
struct TropChart {
  int n = 0;
  std::vector<Var> A;  // tropical parameters
  std::vector<Var> T;  // T_1..T_{n+1}
  Var P;               // crystal operator parameter
  TropExpr F = TropExpr::constant(0);
  std::vector<TropExpr> gamma;                // diagonal order
  std::vector<std::vector<TropExpr>> e;       // e[i-1][k]: new k-th parameter under e_i^p
  std::vector<std::vector<TropExpr>> to_gt;   // z_{i,j} in terms of A, T
  std::vector<TropExpr> from_gt;              // A in terms of Z_{i,j}, T
  std::vector<std::vector<Var>> Z;            // Z[i-1][j-1], i <= n

  std::vector<Int> params_of(const GTPattern& g) const;
  GTPattern pattern_of(const std::vector<Int>& a, const std::vector<Int>& t) const;
  std::unordered_map<Var, Int> env(const std::vector<Int>& a, const std::vector<Int>& t) const;
};

// built once per rank, thread-safe
std::shared_ptr<const TropChart> trop_chart(int n);

struct CombCrystal {
  int n = 0;
  std::vector<Int> T;
  std::vector<GTPattern> vertices;  // sorted
  std::vector<std::vector<Int>> params;
  std::vector<std::vector<Int>> weights;  // diagonal order
  // raise[i-1][v], lower[i-1][v]
  std::vector<std::vector<std::optional<std::size_t>>> raise, lower;

  std::optional<std::size_t> find(const GTPattern& g) const;
  std::vector<std::size_t> highest_weight_vertices() const;
  bool connected() const;
};

bool is_dominant(const std::vector<Int>& T);
std::vector<GTPattern> gt_patterns(const std::vector<Int>& T);  // depth-first, sorted
CombCrystal build_crystal(const std::vector<Int>& T);
// integer points with trop(F) >= 0 in the box 0 <= A <= T_1 - T_{n+1}
std::vector<std::vector<Int>> trop_region(const std::vector<Int>& T);

MPoly crystal_character(const CombCrystal& c, const std::vector<Var>& x);
MPoly schur_oracle(const std::vector<Int>& lambda, const std::vector<Var>& x);

std::string to_dot(const CombCrystal& c);
std::string to_json(const CombCrystal& c);

}  // namespace gcrys::trop
