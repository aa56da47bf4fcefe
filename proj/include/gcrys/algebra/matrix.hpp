#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcrys/algebra/ratexpr.hpp"

namespace gcrys::alg {

class SqMatrix {
 public:
  explicit SqMatrix(std::size_t n = 0) : n_(n), e_(n * n) {}
  static SqMatrix identity(std::size_t n);
  static SqMatrix diag(const std::vector<RatExpr>& d);
  static SqMatrix from_rows(const std::vector<std::vector<RatExpr>>& rows);

  std::size_t size() const { return n_; }
  RatExpr& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const RatExpr& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  SqMatrix transpose() const;
  bool is_identity() const;
  bool is_lower_triangular() const;
  bool is_upper_unitriangular() const;
  bool is_diagonal() const;

  SqMatrix substitute(const Bindings& b) const;
  std::string to_string() const;  // rows of canonical entries

  friend bool operator==(const SqMatrix& a, const SqMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  std::size_t n_;
  std::vector<RatExpr> e_;
};

SqMatrix mat_mul(const SqMatrix& a, const SqMatrix& b);
SqMatrix mat_inverse(const SqMatrix& a);
RatExpr mat_det(const SqMatrix& a);
// determinant of a polynomial matrix (rows of equal length), fraction-free
MPoly poly_det(std::vector<std::vector<MPoly>> m);

inline SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) { return mat_mul(a, b); }

}  // namespace gcrys::alg
