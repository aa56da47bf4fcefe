#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcrys/algebra/monomial.hpp"

namespace gcrys::alg {

using Scalar = mpq_class;

struct Term {
  Monomial mono;
  Scalar coef;
};

// Sparse polynomial over Q. Terms are kept in strictly decreasing grlex order
// with no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Scalar& c);  // NOLINT(implicit)
  MPoly(long c) : MPoly(Scalar(c)) {}  // NOLINT(implicit)
  static MPoly variable(Var v);
  static MPoly monomial(Monomial m, Scalar c = 1);
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  Scalar constant_value() const;  // requires is_constant()

  std::vector<Var> variables() const;
  bool contains(Var v) const;
  std::uint32_t degree_in(Var v) const;
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Scalar& c) const;
  MPoly times(const Monomial& m) const;
  MPoly pow(unsigned k) const;

  // Exact quotient if `d` divides this polynomial, nullopt otherwise.
  std::optional<MPoly> divide_exact(const MPoly& d) const;
  MPoly divide_monomial(const Monomial& m) const;  // requires m | every term

  MPoly derivative(Var v) const;

  // result[k] is the coefficient of v^k
  std::vector<MPoly> coefficients_in(Var v) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);

  // Positive rational c such that this/c has coprime integer coefficients.
  Scalar content() const;
  // this/content, sign fixed so the leading coefficient is positive
  MPoly integer_primitive() const;
  Monomial monomial_content() const;

  std::string to_string() const;
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  std::vector<Term> terms_;
};

MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace gcrys::alg
