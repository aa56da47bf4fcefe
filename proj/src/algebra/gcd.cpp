// Multivariate gcd over Q.
//
// Strategy: strip monomial and integer content, reduce to the content in any
// variable that occurs in only one argument, then test each variable for a
// nontrivial gcd with a modular image (p = 2^61-1, random evaluation of the
// other variables). An image of x-degree zero is a proof that the true gcd
// does not involve x, because for integer-primitive inputs the image of the
// true gcd divides both images and keeps its degree when the leading
// coefficients survive. Otherwise fall back to a primitive PRS in the
// variable of smallest degree.
#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "gcrys/algebra/mpoly.hpp"

namespace gcrys::alg {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kP = (u64{1} << 61) - 1;

u64 reduce(u128 x) {
  u64 lo = static_cast<u64>(x & kP);
  u64 hi = static_cast<u64>(x >> 61);
  u64 r = lo + hi;
  if (r >= kP) r -= kP;
  if (r >= kP) r -= kP;
  return r;
}
u64 mulmod(u64 a, u64 b) { return reduce(static_cast<u128>(a) * b); }
u64 addmod(u64 a, u64 b) {
  u64 r = a + b;
  return r >= kP ? r - kP : r;
}
u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kP - b; }
u64 powmod(u64 b, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a) { return powmod(a, kP - 2); }

u64 mod_of(const mpz_class& z) {
  static const mpz_class P = []() -> mpz_class {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, 61);
    return p - 1;
  }();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), P.get_mpz_t());
  static_assert(sizeof(unsigned long) == 8);
  return static_cast<u64>(r.get_ui());
}

std::optional<u64> mod_of(const Scalar& q) {
  u64 d = mod_of(q.get_den());
  if (d == 0) return std::nullopt;
  return mulmod(mod_of(q.get_num()), invmod(d));
}

using UPoly = std::vector<u64>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// degree of gcd of two nonzero univariate images
std::size_t gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv = invmod(b.back());
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = submod(a[k + shift], mulmod(f, b[k]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 g(0x9b1c3f7a2d5e4c11ULL);
  return g;
}

std::optional<UPoly> image(const MPoly& f, Var x, const std::unordered_map<Var, u64>& pt) {
  UPoly out(f.degree_in(x) + 1, 0);
  for (const auto& t : f.terms()) {
    auto c = mod_of(t.coef);
    if (!c) return std::nullopt;
    u64 v = *c;
    std::uint32_t dx = 0;
    for (const auto& p : t.mono.pows()) {
      if (p.var == x) {
        dx = p.exp;
      } else {
        v = mulmod(v, powmod(pt.at(p.var), p.exp));
      }
    }
    out[dx] = addmod(out[dx], v);
  }
  return out;
}

// Upper bound for deg_x gcd(f, g), or nullopt if every attempt hit a bad point.
std::optional<std::size_t> gcd_degree_bound(const MPoly& f, const MPoly& g, Var x, const std::vector<Var>& vars) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::unordered_map<Var, u64> pt;
    for (Var v : vars)
      if (!(v == x)) pt[v] = rng()() % (kP - 2) + 2;
    auto fi = image(f, x, pt), gi = image(g, x, pt);
    if (!fi || !gi) continue;
    if (fi->back() == 0 || gi->back() == 0) continue;
    return gcd_degree(*fi, *gi);
  }
  return std::nullopt;
}

MPoly gcd_nonzero(MPoly f, MPoly g);

MPoly content_in(const MPoly& f, Var x) {
  auto cs = f.coefficients_in(x);
  std::vector<MPoly> nz;
  for (auto& c : cs)
    if (!c.is_zero()) nz.push_back(std::move(c));
  std::sort(nz.begin(), nz.end(), [](const MPoly& a, const MPoly& b) { return a.size() < b.size(); });
  MPoly g = nz.front().integer_primitive();
  for (std::size_t k = 1; k < nz.size() && !g.is_constant(); ++k) g = gcd_nonzero(g, nz[k]);
  if (g.is_constant()) return MPoly(1);
  return g;
}

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division failed");
  return *q;
}

// pseudo-remainder of a by b in x (lazy: multiplies by lc(b) each step)
MPoly prem(const MPoly& a, const MPoly& b, Var x) {
  auto ac = a.coefficients_in(x), bc = b.coefficients_in(x);
  const MPoly& lb = bc.back();
  while (!ac.empty() && ac.size() >= bc.size()) {
    MPoly la = ac.back();
    std::size_t shift = ac.size() - bc.size();
    for (auto& c : ac) c = c * lb;
    for (std::size_t k = 0; k < bc.size(); ++k) ac[k + shift] -= la * bc[k];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return MPoly::from_coefficients(x, ac);
}

MPoly prs_gcd(const MPoly& f, const MPoly& g, Var x) {
  MPoly cf = content_in(f, x), cg = content_in(g, x);
  MPoly c = (cf.is_constant() || cg.is_constant()) ? MPoly(1) : gcd_nonzero(cf, cg);
  MPoly a = cf.is_constant() ? f : exact(f, cf);
  MPoly b = cg.is_constant() ? g : exact(g, cg);
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  MPoly G;
  for (;;) {
    MPoly r = prem(a, b, x);
    if (r.is_zero()) {
      G = b;
      break;
    }
    if (r.degree_in(x) == 0) {
      G = MPoly(1);
      break;
    }
    MPoly cr = content_in(r, x);
    a = std::move(b);
    b = (cr.is_constant() ? r : exact(r, cr)).integer_primitive();
  }
  return (c * G).integer_primitive();
}

MPoly gcd_nonzero(MPoly f, MPoly g) {
  if (f.is_constant() || g.is_constant()) return MPoly(1);
  Monomial mf = f.monomial_content(), mg = g.monomial_content();
  MPoly mpart = MPoly::monomial(Monomial::gcd(mf, mg));
  if (!mf.is_one()) f = f.divide_monomial(mf);
  if (!mg.is_one()) g = g.divide_monomial(mg);
  if (f.is_constant() || g.is_constant()) return mpart;
  f = f.integer_primitive();
  g = g.integer_primitive();
  if (f == g) return mpart * f;
  if (f.size() > g.size()) std::swap(f, g);
  if (f.total_degree() <= g.total_degree()) {
    if (g.divide_exact(f)) return mpart * f;
  }

  auto vf = f.variables(), vg = g.variables();
  for (Var v : vf)
    if (!std::binary_search(vg.begin(), vg.end(), v)) return mpart * gcd_nonzero(content_in(f, v), g);
  for (Var v : vg)
    if (!std::binary_search(vf.begin(), vf.end(), v)) return mpart * gcd_nonzero(f, content_in(g, v));

  Var best;
  std::uint32_t best_deg = ~0u;
  for (Var v : vf) {
    auto bound = gcd_degree_bound(f, g, v, vf);
    if (bound && *bound == 0) {
      MPoly cf = content_in(f, v), cg = content_in(g, v);
      if (cf.is_constant() || cg.is_constant()) return mpart;
      return mpart * gcd_nonzero(cf, cg);
    }
    std::uint32_t d = std::max(f.degree_in(v), g.degree_in(v));
    if (d < best_deg) {
      best_deg = d;
      best = v;
    }
  }
  return mpart * prs_gcd(f, g, best);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.integer_primitive();
  if (b.is_zero()) return a.integer_primitive();
  return gcd_nonzero(a, b).integer_primitive();
}

}  // namespace gcrys::alg
