#include "gcrys/algebra/ratexpr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gcrys::alg {
namespace {

MPoly exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("rational normalization: inexact division");
  return *q;
}

RatExpr make_monic(MPoly num, MPoly den);

}  // namespace

struct RatExprAccess {
  static RatExpr raw(MPoly n, MPoly d) { return RatExpr(std::move(n), std::move(d), nullptr); }
};

namespace {

RatExpr make_monic(MPoly num, MPoly den) {
  if (num.is_zero()) return RatExpr();
  Scalar lc = den.leading().coef;
  if (lc != 1) {
    Scalar inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatExprAccess::raw(std::move(num), std::move(den));
}

}  // namespace

RatExpr RatExpr::normalize(MPoly num, MPoly den) {
  if (den.is_zero()) throw std::domain_error("rational expression with zero denominator");
  if (num.is_zero()) return RatExpr();
  if (!den.is_constant() && !num.is_constant()) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  return make_monic(std::move(num), std::move(den));
}

Scalar RatExpr::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a nonconstant expression");
  return num_.constant_value() / den_.constant_value();
}

std::vector<Var> RatExpr::variables() const {
  auto a = num_.variables(), b = den_.variables();
  std::vector<Var> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RatExpr RatExpr::operator-() const { return RatExprAccess::raw(-num_, den_); }

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    MPoly n = a.num_ + b.num_;
    if (a.den_.is_constant()) return make_monic(std::move(n), a.den_);
    return RatExpr::normalize(std::move(n), a.den_);
  }
  if (a.den_.is_constant()) return make_monic(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_constant()) return make_monic(a.num_ + b.num_ * a.den_, a.den_);
  MPoly g = gcd(a.den_, b.den_);
  MPoly da = exact_div(a.den_, g), db = exact_div(b.den_, g);
  MPoly n = a.num_ * db + b.num_ * da;
  MPoly d = a.den_ * db;
  if (n.is_zero()) return RatExpr();
  if (!g.is_constant()) {
    MPoly h = gcd(n, g);
    if (!h.is_constant()) {
      n = exact_div(n, h);
      d = exact_div(d, h);
    }
  }
  return make_monic(std::move(n), std::move(d));
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return RatExpr();
  if (a.is_constant() && b.is_constant()) return RatExpr(a.constant_value() * b.constant_value());
  MPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  if (!n1.is_constant() && !d2.is_constant()) {
    MPoly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = exact_div(n1, g);
      d2 = exact_div(d2, g);
    }
  }
  if (!n2.is_constant() && !d1.is_constant()) {
    MPoly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = exact_div(n2, g);
      d1 = exact_div(d1, g);
    }
  }
  return make_monic(n1 * n2, d1 * d2);
}

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational expression");
  return make_monic(den_, num_);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) { return a * b.inverse(); }

RatExpr RatExpr::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return make_monic(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RatExpr RatExpr::derivative(Var v) const {
  MPoly dn = num_.derivative(v), dd = den_.derivative(v);
  if (dd.is_zero()) return RatExpr::normalize(dn, den_);
  return RatExpr::normalize(dn * den_ - num_ * dd, den_ * den_);
}

namespace {

template <class T, class Conv>
T eval_poly(const MPoly& p, const std::unordered_map<Var, T>& b, Conv conv) {
  T sum = 0;
  for (const auto& t : p.terms()) {
    T v = conv(t.coef);
    for (const auto& [x, e] : t.mono.pows()) {
      auto it = b.find(x);
      if (it == b.end()) throw std::invalid_argument("unbound variable '" + x.name() + "' in numeric evaluation");
      T base = it->second;
      T acc = 1;
      for (std::uint32_t k = 0; k < e; ++k) acc *= base;
      v *= acc;
    }
    sum += v;
  }
  return sum;
}

RatExpr subst_poly(const MPoly& p, const Bindings& b, std::map<std::pair<std::string, std::uint32_t>, RatExpr>& cache) {
  // group terms that only involve unbound variables into one polynomial
  std::vector<Term> free_terms;
  RatExpr sum;
  for (const auto& t : p.terms()) {
    RatExpr v(t.coef);
    Monomial::Storage keep;
    for (const auto& [x, e] : t.mono.pows()) {
      auto it = b.find(x);
      if (it == b.end()) {
        keep.push_back({x, e});
        continue;
      }
      auto key = std::make_pair(x.name(), e);
      auto c = cache.find(key);
      if (c == cache.end()) c = cache.emplace(key, it->second.pow(static_cast<int>(e))).first;
      v = v * c->second;
    }
    if (v.is_zero()) continue;
    v = v * RatExpr(MPoly::monomial(Monomial::from_pairs(std::move(keep))));
    if (v.is_polynomial()) {
      Scalar dc = v.den().constant_value();
      for (const auto& tt : v.num().terms()) free_terms.push_back({tt.mono, tt.coef / dc});
    } else {
      sum = sum + v;
    }
  }
  return sum + RatExpr(MPoly::from_terms(std::move(free_terms)));
}

}  // namespace

RatExpr RatExpr::substitute(const Bindings& b) const {
  std::map<std::pair<std::string, std::uint32_t>, RatExpr> cache;
  RatExpr d = subst_poly(den_, b, cache);
  if (d.is_zero()) throw std::domain_error("substitution hits a pole: denominator " + den_.to_string() + " vanishes");
  return subst_poly(num_, b, cache) / d;
}

double RatExpr::evaluate(const std::unordered_map<Var, double>& b) const {
  auto conv = [](const Scalar& q) { return q.get_d(); };
  double d = eval_poly<double>(den_, b, conv);
  if (d == 0.0 || !std::isfinite(d)) throw std::domain_error("evaluation at a pole of " + to_string());
  return eval_poly<double>(num_, b, conv) / d;
}

ExtFloat RatExpr::evaluate_ext(const std::unordered_map<Var, ExtFloat>& b) const {
  auto conv = [](const Scalar& q) { return ExtFloat(ExtFloat(q.get_num().get_str()) / ExtFloat(q.get_den().get_str())); };
  ExtFloat d = eval_poly<ExtFloat>(den_, b, conv);
  if (d == 0) throw std::domain_error("evaluation at a pole of " + to_string());
  return eval_poly<ExtFloat>(num_, b, conv) / d;
}

std::string RatExpr::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

}  // namespace gcrys::alg
