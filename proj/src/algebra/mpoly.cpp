#include "gcrys/algebra/mpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcrys::alg {
namespace {

bool term_greater(const Term& a, const Term& b) { return grlex(a.mono, b.mono) > 0; }

// sorted, merged, zero-free
std::vector<Term> canonicalize(std::vector<Term> v) {
  std::sort(v.begin(), v.end(), term_greater);
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return out;
}

}  // namespace

MPoly::MPoly(const Scalar& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

MPoly MPoly::variable(Var v) { return monomial(Monomial(v), 1); }

MPoly MPoly::monomial(Monomial m, Scalar c) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Scalar MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a nonconstant polynomial");
  return terms_.empty() ? Scalar(0) : terms_[0].coef;
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> vs;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.pows()) vs.push_back(p.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool MPoly::contains(Var v) const {
  for (const auto& t : terms_)
    if (t.mono.degree_in(v)) return true;
  return false;
}

std::uint32_t MPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    auto c = grlex(i->mono, j->mono);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      Scalar s = i->coef + j->coef;
      if (sgn(s) != 0) r.terms_.push_back({i->mono, std::move(s)});
      ++i, ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, o.terms_.end());
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_monomial()) return times(o.terms_[0].mono).scaled(o.terms_[0].coef);
  if (is_monomial()) return o.times(terms_[0].mono).scaled(terms_[0].coef);
  std::vector<Term> v;
  v.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) v.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(std::move(v));
}

MPoly MPoly::scaled(const Scalar& c) const {
  if (sgn(c) == 0) return {};
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

MPoly MPoly::times(const Monomial& m) const {
  MPoly r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.mono = t.mono * m;  // order preserved by monomial multiplication
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return MPoly();
  if (d.is_constant()) return scaled(1 / d.terms_[0].coef);
  const Term& lt = d.terms_.front();
  if (d.is_monomial()) {
    std::vector<Term> q;
    q.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      q.push_back({lt.mono.quotient_of(t.mono), t.coef / lt.coef});
    }
    MPoly r;
    r.terms_ = std::move(q);
    return r;
  }
  if (d.total_degree() > total_degree()) return std::nullopt;
  for (const auto& [v, e] : lt.mono.pows())
    if (degree_in(v) < e) return std::nullopt;

  std::map<Monomial, Scalar, GrlexGreater> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coef);
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lt.mono.divides(it->first)) return std::nullopt;
    Monomial qm = lt.mono.quotient_of(it->first);
    Scalar qc = it->second / lt.coef;
    rem.erase(it);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      Monomial m = d.terms_[k].mono * qm;
      auto [pos, inserted] = rem.try_emplace(std::move(m), 0);
      pos->second -= qc * d.terms_[k].coef;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    q.push_back({std::move(qm), std::move(qc)});
  }
  MPoly r;
  r.terms_ = std::move(q);
  return r;
}

MPoly MPoly::divide_monomial(const Monomial& m) const {
  MPoly r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.mono = m.quotient_of(t.mono);
  return r;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.degree_in(v);
    if (!e) continue;
    Monomial::Storage s;
    for (const auto& p : t.mono.pows()) {
      if (p.var == v) {
        if (p.exp > 1) s.push_back({v, p.exp - 1});
      } else {
        s.push_back(p);
      }
    }
    out.push_back({Monomial::from_pairs(std::move(s)), t.coef * e});
  }
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) buckets[t.mono.degree_in(v)].push_back({t.mono.without(v), t.coef});
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // removing one variable can reorder terms, so re-sort
    out.push_back(from_terms(std::move(b)));
  }
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial xk(v, static_cast<std::uint32_t>(k));
    for (const auto& t : coeffs[k].terms_) all.push_back({t.mono * xk, t.coef});
  }
  return from_terms(std::move(all));
}

Scalar MPoly::content() const {
  if (terms_.empty()) return 1;
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Scalar c(g, l);
  c.canonicalize();
  return c;
}

MPoly MPoly::integer_primitive() const {
  if (terms_.empty()) return {};
  Scalar c = content();
  if (sgn(terms_.front().coef) < 0) c = -c;
  if (c == 1) return *this;
  return scaled(1 / c);
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (std::size_t k = 1; k < terms_.size() && !m.is_one(); ++k) m = Monomial::gcd(m, terms_[k].mono);
  return m;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    if (sgn(c) < 0) {
      s += '-';
      c = -c;
    } else if (!first) {
      s += '+';
    }
    first = false;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) {
        s += c.get_str();
        s += '*';
      }
      s += t.mono.to_string();
    }
  }
  return s;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coef != b.terms_[k].coef) return false;
  return true;
}

}  // namespace gcrys::alg
