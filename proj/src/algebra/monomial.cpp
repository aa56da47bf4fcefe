#include "gcrys/algebra/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcrys::alg {

Monomial::Monomial(Var v, std::uint32_t e) {
  if (e > 0) {
    pows_.push_back({v, e});
    degree_ = e;
  }
}

Monomial Monomial::from_pairs(Storage pows) {
  std::sort(pows.begin(), pows.end(), [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& p : pows) {
    if (p.exp == 0) continue;
    if (!m.pows_.empty() && m.pows_.back().var == p.var)
      m.pows_.back().exp += p.exp;
    else
      m.pows_.push_back(p);
    m.degree_ += p.exp;
  }
  return m;
}

std::uint32_t Monomial::degree_in(Var v) const {
  for (const auto& p : pows_)
    if (p.var == v) return p.exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.pows_.reserve(pows_.size() + o.pows_.size());
  auto i = pows_.begin(), j = o.pows_.begin();
  while (i != pows_.end() && j != o.pows_.end()) {
    if (i->var == j->var) {
      r.pows_.push_back({i->var, i->exp + j->exp});
      ++i, ++j;
    } else if (i->var < j->var) {
      r.pows_.push_back(*i++);
    } else {
      r.pows_.push_back(*j++);
    }
  }
  r.pows_.insert(r.pows_.end(), i, pows_.end());
  r.pows_.insert(r.pows_.end(), j, o.pows_.end());
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  auto j = o.pows_.begin();
  for (const auto& p : pows_) {
    while (j != o.pows_.end() && j->var < p.var) ++j;
    if (j == o.pows_.end() || !(j->var == p.var) || j->exp < p.exp) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  auto i = pows_.begin();
  for (const auto& p : o.pows_) {
    std::uint32_t e = p.exp;
    if (i != pows_.end() && i->var == p.var) {
      if (i->exp > e) throw std::logic_error("monomial quotient: not divisible");
      e -= i->exp;
      ++i;
    }
    if (e) r.pows_.push_back({p.var, e});
  }
  if (i != pows_.end()) throw std::logic_error("monomial quotient: not divisible");
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& p : pows_)
    if (!(p.var == v)) {
      r.pows_.push_back(p);
      r.degree_ += p.exp;
    }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.pows_.begin(), j = b.pows_.begin();
  while (i != a.pows_.end() && j != b.pows_.end()) {
    if (i->var == j->var) {
      std::uint32_t e = std::min(i->exp, j->exp);
      r.pows_.push_back({i->var, e});
      r.degree_ += e;
      ++i, ++j;
    } else if (i->var < j->var) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto i = a.pows_.begin(), j = b.pows_.begin();
  while (i != a.pows_.end() && j != b.pows_.end()) {
    if (i->var == j->var) {
      if (i->exp != j->exp) return i->exp <=> j->exp;
      ++i, ++j;
    } else if (i->var < j->var) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i != a.pows_.end()) return std::strong_ordering::greater;
  if (j != b.pows_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& p : pows_) {
    h ^= p.var.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint32_t>{}(p.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& p : pows_) {
    if (!s.empty()) s += '*';
    s += p.var.name();
    s += '^';
    s += std::to_string(p.exp);
  }
  return s;
}

}  // namespace gcrys::alg
