#include <stdexcept>

#include "gcrys/toda/toda.hpp"

namespace gcrys::toda {

namespace {

// polynomial in a central lambda with coefficients in R, lowest degree first
template <class R>
using LamPoly = std::vector<R>;

template <class R, class Mul>
LamPoly<R> recursion(int n, const std::function<R(int)>& diag, const std::function<R(int)>& offdiag, const R& zero,
                     const R& one, Mul mul) {
  auto add = [&](LamPoly<R> a, const LamPoly<R>& b) {
    if (a.size() < b.size()) a.resize(b.size(), zero);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = a[k] + b[k];
    return a;
  };
  LamPoly<R> prev2{one}, prev1{one};
  for (int k = 1; k <= n + 1; ++k) {
    // prev1 * (lambda + diag_k)
    LamPoly<R> cur(prev1.size() + 1, zero);
    for (std::size_t j = 0; j < prev1.size(); ++j) {
      cur[j + 1] = cur[j + 1] + prev1[j];
      cur[j] = cur[j] + mul(prev1[j], diag(k));
    }
    if (k >= 2) {
      LamPoly<R> sub;
      for (const auto& c : prev2) sub.push_back(zero - mul(c, offdiag(k - 1)));
      cur = add(cur, sub);
    }
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

TodaSystem build(int n, Ordering ord) {
  DiffOp zero(n), one = DiffOp::constant(n, 1);
  auto mul = [ord](const DiffOp& a, const DiffOp& b) { return ord == Ordering::right ? a * b : b * a; };
  auto poly = recursion<DiffOp>(
      n, [n](int k) { return DiffOp::d(n, k); }, [n](int i) { return DiffOp::q(n, i); }, zero, one, mul);
  TodaSystem s;
  s.n = n;
  s.ordering = ord;
  for (int k = 1; k <= n + 1; ++k) s.H.push_back(poly[n + 1 - k]);
  return s;
}

}  // namespace

void certify_commuting(const TodaSystem& s) {
  for (std::size_t i = 0; i < s.H.size(); ++i)
    for (std::size_t j = i + 1; j < s.H.size(); ++j) {
      DiffOp c = commutator(s.H[i], s.H[j]);
      if (!c.is_zero())
        throw std::runtime_error("[H_" + std::to_string(i + 1) + ", H_" + std::to_string(j + 1) + "] = " + c.to_string());
    }
}

TodaSystem jacobi_char_poly(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  TodaSystem s = build(n, Ordering::right);
  try {
    certify_commuting(s);
    return s;
  } catch (const std::runtime_error&) {
  }
  s = build(n, Ordering::left);
  certify_commuting(s);
  return s;
}

DiffOp toda_hamiltonian(const TodaSystem& s) {
  DiffOp half = (s.H[0] * s.H[0]).scaled(Scalar(1, 2));
  return (half - s.H[1]).sigma();
}

std::vector<PhaseFn> classical_integrals(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  PhaseFn zero(n), one = PhaseFn::constant(n, 1);
  auto poly = recursion<PhaseFn>(
      n, [n](int k) { return PhaseFn::p(n, k); }, [n](int i) { return PhaseFn::q(n, i); }, zero, one,
      [](const PhaseFn& a, const PhaseFn& b) { return a * b; });
  std::vector<PhaseFn> out;
  for (int k = 1; k <= n + 1; ++k) out.push_back(poly[n + 1 - k]);
  return out;
}

std::vector<PhaseFn> pgl3_relations() {
  auto c = classical_integrals(2);
  // signs chosen to match the usual presentation of the quantum cohomology ring
  return {c[0], -c[1], c[2]};
}

std::vector<double> rho(int n) {
  std::vector<double> r(n + 1);
  for (int j = 1; j <= n + 1; ++j) r[j - 1] = 0.5 * n - (j - 1);
  return r;
}

}  // namespace gcrys::toda
