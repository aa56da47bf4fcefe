#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gcrys/algebra/variable.hpp"

namespace gcrys::alg {

struct VarPow {
  Var var;
  std::uint32_t exp;
  friend bool operator==(const VarPow&, const VarPow&) = default;
};

// Power product with strictly positive exponents, sorted by variable.
class Monomial {
 public:
  using Storage = boost::container::small_vector<VarPow, 6>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t e = 1);
  static Monomial from_pairs(Storage pows);  // sorts and merges

  const Storage& pows() const { return pows_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t degree_in(Var v) const;
  bool is_one() const { return pows_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // o / *this, requires divides(o)
  Monomial quotient_of(const Monomial& o) const;
  Monomial without(Var v) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // graded lexicographic comparison; a variable earlier in the name order is more significant
  friend std::strong_ordering grlex(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.pows_ == b.pows_; }

  std::size_t hash() const;
  std::string to_string() const;  // "a^1*b^2", empty for 1

 private:
  Storage pows_;
  std::uint32_t degree_ = 0;
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace gcrys::alg
