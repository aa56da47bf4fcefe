#include "gcrys/algebra/matrix.hpp"

#include <stdexcept>

namespace gcrys::alg {

SqMatrix SqMatrix::identity(std::size_t n) {
  SqMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SqMatrix SqMatrix::diag(const std::vector<RatExpr>& d) {
  SqMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

SqMatrix SqMatrix::from_rows(const std::vector<std::vector<RatExpr>>& rows) {
  SqMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("from_rows: matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SqMatrix SqMatrix::transpose() const {
  SqMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool SqMatrix::is_identity() const { return *this == identity(n_); }

bool SqMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool SqMatrix::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!((*this)(i, i) == RatExpr(1))) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool SqMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

SqMatrix SqMatrix::substitute(const Bindings& b) const {
  SqMatrix m(n_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].substitute(b);
  return m;
}

std::string SqMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ",\n [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

SqMatrix mat_mul(const SqMatrix& a, const SqMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mat_mul: size mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  std::size_t n = a.size();
  SqMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatExpr s;
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(s);
    }
  return c;
}

SqMatrix mat_inverse(const SqMatrix& a) {
  std::size_t n = a.size();
  SqMatrix m = a, inv = SqMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) throw std::domain_error("mat_inverse: singular matrix, det = " + mat_det(a).to_string());
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    RatExpr piv = m(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(k, j).is_zero()) m(k, j) *= piv;
      if (!inv(k, j).is_zero()) inv(k, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      RatExpr f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Bareiss on polynomial entries; every division is exact
MPoly poly_det(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  MPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // smallest nonzero pivot keeps the intermediate polynomials small
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].is_zero() && (p == n || m[i][k].size() < m[p][k].size())) p = i;
    if (p == n) return MPoly();
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (prev.is_constant()) {
          m[i][j] = t * MPoly(1 / prev.constant_value());
        } else {
          auto q = t.divide_exact(prev);
          if (!q) throw std::logic_error("mat_det: inexact Bareiss division");
          m[i][j] = std::move(*q);
        }
      }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// rows are cleared of denominators (lcm per row), then fraction-free elimination
// runs on polynomials; the single reduction happens at the end
RatExpr mat_det(const SqMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
  MPoly scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly l(1);
    for (std::size_t j = 0; j < n; ++j) {
      const MPoly& d = a(i, j).den();
      if (d.is_constant() || l.divide_exact(d)) continue;
      l = *(l * d).divide_exact(gcd(l, d));
    }
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).num() * *l.divide_exact(a(i, j).den());
    scale *= l;
  }
  return RatExpr::normalize(poly_det(std::move(m)), scale);
}

}  // namespace gcrys::alg
