#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gcrys/algebra/mpoly.hpp"

namespace gcrys::alg {

using ExtFloat = boost::multiprecision::cpp_bin_float_50;

class RatExpr;
using Bindings = std::unordered_map<Var, RatExpr>;

// Reduced fraction num/den with den monic (leading grlex coefficient 1).
class RatExpr {
 public:
  RatExpr() = default;
  RatExpr(const Scalar& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RatExpr(long c) : RatExpr(Scalar(c)) {}  // NOLINT(implicit)
  RatExpr(int c) : RatExpr(Scalar(c)) {}  // NOLINT(implicit)
  RatExpr(const MPoly& p) : num_(p), den_(1) {}  // NOLINT(implicit)
  static RatExpr variable(Var v) { return RatExpr(MPoly::variable(v)); }
  static RatExpr variable(std::string_view name) { return variable(Var::intern(name)); }
  // rat_normalize; throws on zero denominator
  static RatExpr normalize(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Scalar constant_value() const;
  std::vector<Var> variables() const;

  RatExpr operator-() const;
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
  RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
  RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
  RatExpr& operator/=(const RatExpr& o) { return *this = *this / o; }
  RatExpr inverse() const;
  RatExpr pow(int k) const;

  friend bool operator==(const RatExpr& a, const RatExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatExpr derivative(Var v) const;

  // Exact composition. Unbound variables stay symbolic. Throws at a pole.
  RatExpr substitute(const Bindings& b) const;
  double evaluate(const std::unordered_map<Var, double>& b) const;
  ExtFloat evaluate_ext(const std::unordered_map<Var, ExtFloat>& b) const;

  // Canonical text "(num)/(den)"; parse() inverts it exactly and also accepts
  // ordinary infix input with + - * / ^ and parentheses.
  std::string to_string() const;
  static RatExpr parse(std::string_view text);

 private:
  friend struct RatExprAccess;
  RatExpr(MPoly n, MPoly d, std::nullptr_t) : num_(std::move(n)), den_(std::move(d)) {}
  MPoly num_;
  MPoly den_ = MPoly(1);
};

inline RatExpr var(std::string_view name) { return RatExpr::variable(name); }

}  // namespace gcrys::alg
