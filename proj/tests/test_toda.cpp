#include <doctest.h>

#include <cmath>
#include <random>

#include "gcrys/toda/toda.hpp"

using namespace gcrys::toda;

namespace {

DiffOp random_op(std::mt19937& g, int n) {
  DiffOp r(n);
  std::uniform_int_distribution<int> qe(-1, 1), de(0, 2), co(-3, 3);
  for (int t = 0; t < 3; ++t) {
    OpKey k{std::vector<int>(n), std::vector<unsigned>(n + 1)};
    for (auto& e : k.q) e = qe(g);
    for (auto& e : k.d) e = static_cast<unsigned>(de(g)) / 2;
    r = r + DiffOp::term(n, k, co(g));
  }
  return r;
}

PhaseFn random_phase(std::mt19937& g, int n) {
  PhaseFn r(n);
  std::uniform_int_distribution<int> qe(-1, 1), de(0, 2), co(-3, 3);
  for (int t = 0; t < 3; ++t) {
    OpKey k{std::vector<int>(n), std::vector<unsigned>(n + 1)};
    for (auto& e : k.q) e = qe(g);
    for (auto& e : k.d) e = static_cast<unsigned>(de(g));
    r = r + PhaseFn::term(n, k, co(g));
  }
  return r;
}

PhaseFn P(int n, int k) { return PhaseFn::p(n, k); }
PhaseFn Q(int n, int i) { return PhaseFn::q(n, i); }

// elementary symmetric polynomial in p_1..p_{n+1}
PhaseFn elementary(int n, int k) {
  PhaseFn out(n);
  std::vector<int> idx(k);
  std::function<void(int, int, PhaseFn)> rec = [&](int start, int left, PhaseFn acc) {
    if (left == 0) {
      out = out + acc;
      return;
    }
    for (int j = start; j <= n + 1; ++j) rec(j + 1, left - 1, acc * P(n, j));
  };
  rec(1, k, PhaseFn::constant(n, 1));
  return out;
}

}  // namespace

TEST_CASE("normal ordering") {
  DiffOp d1 = DiffOp::d(1, 1), d2 = DiffOp::d(1, 2), q1 = DiffOp::q(1, 1);
  CHECK(d1 * q1 == q1 * d1 - q1);
  CHECK(d2 * q1 == q1 * d2 + q1);
  CHECK((d1 * q1).to_string() == "d1*q1 - q1");
  CHECK(DiffOp::constant(1, 1) * d1 == d1);
  std::mt19937 g(11);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + t % 3;
    DiffOp a = random_op(g, n), b = random_op(g, n), c = random_op(g, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).sigma() == a.sigma() * b.sigma());
  }
}

TEST_CASE("GL2 Toda operators") {
  auto s = jacobi_char_poly(1);
  DiffOp d1 = DiffOp::d(1, 1), d2 = DiffOp::d(1, 2), q1 = DiffOp::q(1, 1);
  CHECK(s.H[0] == d1 + d2);
  CHECK(s.H[1] == d1 * d2 - q1);
  DiffOp half_lap = (d1 * d1 + d2 * d2).scaled(mpq_class(1, 2));
  CHECK((s.H[0] * s.H[0]).scaled(mpq_class(1, 2)) - s.H[1] - half_lap == q1);
  CHECK(toda_hamiltonian(s) == half_lap - q1);
  CHECK(commutator(s.H[0], s.H[1]).is_zero());
}

TEST_CASE("quantum Toda operators commute") {
  for (int n = 1; n <= 3; ++n) {
    auto s = jacobi_char_poly(n);
    CHECK(s.ordering == Ordering::right);
    REQUIRE(s.H.size() == static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < s.H.size(); ++i) {
      for (std::size_t j = i + 1; j < s.H.size(); ++j) CHECK(commutator(s.H[i], s.H[j]).is_zero());
      CHECK(symbol(s.H[i]) == elementary(n, static_cast<int>(i) + 1));
    }
    DiffOp H = toda_hamiltonian(s);
    DiffOp want(n);
    for (int k = 1; k <= n + 1; ++k) want = want + (DiffOp::d(n, k) * DiffOp::d(n, k)).scaled(mpq_class(1, 2));
    for (int i = 1; i <= n; ++i) want = want - DiffOp::q(n, i);
    CHECK(H == want);
    for (const auto& h : s.H) CHECK(commutator(H, h.sigma()).is_zero());
  }
  // a non-commuting family is reported with the offending commutator
  TodaSystem bad;
  bad.n = 1;
  bad.H = {DiffOp::d(1, 1), DiffOp::q(1, 1)};
  CHECK_THROWS_WITH_AS(certify_commuting(bad), doctest::Contains("[H_1, H_2]"), std::runtime_error);
}

TEST_CASE("symbols multiply") {
  std::mt19937 g(5);
  for (int t = 0; t < 30; ++t) {
    DiffOp a = random_op(g, 2), b = random_op(g, 2);
    if (a.is_zero() || b.is_zero()) continue;
    PhaseFn top = symbol(a) * symbol(b);
    if (top.is_zero()) continue;
    CHECK(quasi_classical(a * b).p_degree_part(a.order() + b.order()) == top);
  }
  CHECK(quasi_classical(DiffOp::constant(2, 7)) == PhaseFn::constant(2, 7));
}

TEST_CASE("classical limit and Poisson brackets") {
  CHECK(poisson_bracket(P(1, 1), Q(1, 1)) == Q(1, 1));
  CHECK(poisson_bracket(P(1, 2), Q(1, 1)) == -Q(1, 1));
  for (int n = 1; n <= 3; ++n) {
    auto quantum = jacobi_char_poly(n);
    auto cl = classical_integrals(n);
    for (int k = 0; k <= n; ++k) CHECK(quasi_classical(quantum.H[k]) == cl[k]);
    for (const auto& f : cl)
      for (const auto& h : cl) CHECK(poisson_bracket(f, h).is_zero());
    PhaseFn H(n);
    for (int k = 1; k <= n + 1; ++k) H = H + (P(n, k) * P(n, k)).scaled(mpq_class(1, 2));
    for (int i = 1; i <= n; ++i) H = H - Q(n, i);
    CHECK(quasi_classical(toda_hamiltonian(quantum)) == H);
    CHECK(poisson_bracket(H, H).is_zero());
  }
  std::mt19937 g(9);
  for (int t = 0; t < 25; ++t) {
    PhaseFn a = random_phase(g, 2), b = random_phase(g, 2), c = random_phase(g, 2);
    CHECK(poisson_bracket(a, b) == -poisson_bracket(b, a));
    CHECK((poisson_bracket(a, poisson_bracket(b, c)) + poisson_bracket(b, poisson_bracket(c, a)) +
           poisson_bracket(c, poisson_bracket(a, b)))
              .is_zero());
    CHECK(poisson_bracket(a, b * c) == poisson_bracket(a, b) * c + b * poisson_bracket(a, c));
  }
}

TEST_CASE("PGL3 relations") {
  auto r = pgl3_relations();
  const int n = 2;
  CHECK(r[0] == P(n, 1) + P(n, 2) + P(n, 3));
  CHECK(r[1] == Q(n, 1) + Q(n, 2) - P(n, 1) * P(n, 2) - P(n, 1) * P(n, 3) - P(n, 2) * P(n, 3));
  CHECK(r[2] == P(n, 1) * P(n, 2) * P(n, 3) - P(n, 3) * Q(n, 1) - P(n, 1) * Q(n, 2));
  CHECK(r[2].to_string() == "p1*p2*p3 - p1*q2 - p3*q1");
}

TEST_CASE("finite-difference application") {
  auto s = jacobi_char_poly(2);
  DiffOp H = toda_hamiltonian(s);
  std::vector<double> c{0.7, -0.3, 1.1};
  auto f = [&](const std::vector<double>& t) {
    double v = 1;
    for (std::size_t k = 0; k < t.size(); ++k) v *= std::pow(t[k], c[k]);
    return v;
  };
  for (std::vector<double> pt : {std::vector<double>{1.0, 2.0, 0.5}, std::vector<double>{0.3, 1.7, 4.0}}) {
    double want = 0.5 * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) - (pt[1] / pt[0] + pt[2] / pt[1]);
    want *= f(pt);
    CHECK(std::abs(apply_op(H, f, pt) - want) <= 1e-9 * std::abs(want));
  }
  auto logt = [](const std::vector<double>& t) { return std::log(t[0]); };
  CHECK(apply_op(DiffOp::d(2, 1), logt, {2.0, 1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(apply_op(H, f, {1.0, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(H, f, {1.0, 1.0, 1.0}, {1e-20, 2}), std::invalid_argument);
  auto bad = [](const std::vector<double>&) { return std::nan(""); };
  CHECK_THROWS_AS(apply_op(H, bad, {1.0, 1.0, 1.0}), std::runtime_error);
  auto r = rho(2);
  CHECK(r == std::vector<double>{1.0, 0.0, -1.0});
}
