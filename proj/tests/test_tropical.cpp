#include <doctest.h>

#include <random>
#include <set>

#include "gcrys/crystal/crystal.hpp"
#include "gcrys/tropical/tropical.hpp"
#include "support.hpp"

using namespace gcrys::trop;
using gcrys::alg::var;

namespace {

Var V(const char* s) { return Var::intern(s); }

gcrys::crystal::CrystalPoint gl4_point() {
  using namespace gcrys::crystal;
  std::vector<RatExpr> t{var("t1"), var("t2"), var("t3"), var("t4")};
  std::vector<RatExpr> a{var("a"), var("b"), var("c"), var("d"), var("e"), var("f")};
  return build_point(HighestWeight::of(t), ReducedWord(RankSpec(3), {3, 2, 1, 3, 2, 3}), a);
}

// random subtraction-free expression in a, b, c
PosExpr random_pos(std::mt19937& g, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
  static const char* names[] = {"a", "b", "c"};
  switch (pick(g)) {
    case 0:
      return PosExpr::variable(V(names[g() % 3]));
    case 1:
      return PosExpr::constant(1 + static_cast<long>(g() % 3));
    case 2:
      return PosExpr::sum({random_pos(g, depth - 1), random_pos(g, depth - 1)});
    case 3:
      return PosExpr::product({random_pos(g, depth - 1), random_pos(g, depth - 1)});
    default:
      return PosExpr::quotient(random_pos(g, depth - 1), random_pos(g, depth - 1));
  }
}

// order of vanishing at q = 0 of a rational function of q alone
long q_order(const RatExpr& r, Var q) {
  auto ord = [&](const MPoly& p) { return static_cast<long>(p.monomial_content().degree_in(q)); };
  return ord(r.num()) - ord(r.den());
}

std::vector<std::vector<Int>> partitions(int parts, int max_sum) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(parts, 0);
  std::function<void(int, Int, Int)> rec = [&](int k, Int cap, Int left) {
    if (k == parts) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v <= std::min(cap, left); ++v) {
      cur[k] = v;
      rec(k + 1, v, left - v);
    }
  };
  rec(0, max_sum, max_sum);
  return out;
}

}  // namespace

TEST_CASE("tropicalization basics") {
  CHECK(tropicalize(PosExpr::parse("a*b/c")) == TropExpr::parse("A+B-C"));
  CHECK(tropicalize(PosExpr::parse("a*b/c")).to_string() == "A+B-C");
  CHECK(tropicalize(PosExpr::parse("3*a + 1/2")) == TropExpr::parse("min(A, 0)"));
  CHECK_THROWS_AS(PosExpr::parse("a - b"), std::domain_error);
  CHECK_THROWS_AS(PosExpr::from_ratexpr(RatExpr::parse("a - b")), std::domain_error);
  CHECK_THROWS_AS(PosExpr::constant(0), std::domain_error);
  CHECK(trop_var(V("t_3")).name() == "T_3");
  CHECK(trop_var(V("a_{1,2}")).name() == "A_{1,2}");
  CHECK(PosExpr::parse("(a+b)^2/c").to_ratexpr() == RatExpr::parse("(a+b)^2/c"));
}

TEST_CASE("tropicalization is the q-adic valuation") {
  std::mt19937 g(7);
  Var q = V("q");
  RatExpr Q = RatExpr::variable(q);
  for (int trial = 0; trial < 60; ++trial) {
    PosExpr e = random_pos(g, 3);
    TropExpr t = tropicalize(e);
    std::uniform_int_distribution<int> X(-3, 3);
    for (int s = 0; s < 3; ++s) {
      std::unordered_map<Var, Int> env;
      gcrys::alg::Bindings b;
      for (const char* n : {"a", "b", "c"}) {
        int x = X(g);
        env[trop_var(V(n))] = x;
        RatExpr coef = 1 + static_cast<long>(g() % 4);
        b[V(n)] = coef * (x >= 0 ? Q.pow(x) : Q.inverse().pow(-x));
      }
      RatExpr r = e.to_ratexpr().substitute(b);
      CHECK(t.eval(env) == q_order(r, q));
      CHECK(t.normal_form().eval(env) == t.eval(env));
    }
  }
}

TEST_CASE("GL4 standard chart: trop(F), trop(gamma), operator rules") {
  using namespace gcrys::crystal;
  auto p = gl4_point();
  auto m = maps_of(p);
  TropExpr tf = tropicalize(m.F);
  CHECK(tf == TropExpr::parse("min(A,B,C,D,E,F, T3-F-T4,T2-E-T3,T2+F-D-E-T3, T1-C-T2,T1+E-B-C-T2,T1+D+E-A-B-C-T2)"));
  std::vector<TropExpr> want_gamma{TropExpr::parse("C+E+F+T4"), TropExpr::parse("B+D+T3-F"), TropExpr::parse("A+T2-D-E"),
                                   TropExpr::parse("T1-A-B-C")};
  for (int k = 0; k < 4; ++k) CHECK(tropicalize(m.gamma[k]) == want_gamma[k]);

  auto q = e_action(p, 2, var("p"));
  Var P = V("P");
  TropExpr Dp = tropicalize(q.params[3]).substitute(P, 1);
  CHECK(Dp == TropExpr::parse("min(A+D+1,2D+1)-min(A,D+1)"));
  CHECK(Dp.to_string() == "min(A+D+1, 2*D+1) - min(A, D+1)");
  CHECK(tropicalize(q.params[0]) == tropicalize(PosExpr::parse("(a^2 + a*d)/(a + d*p)")));
  CHECK(tropicalize(q.params[1]) == tropicalize(PosExpr::parse("(a*b + b*d*p)/(a + d)")));
  CHECK(tropicalize(q.params[0]).substitute(P, 1).to_string() == "min(A+D, 2*A) - min(A, D+1)");
}

TEST_CASE("standard chart matches the GL4 example labels") {
  auto ch = trop_chart(3);
  CHECK(ch->F == TropExpr::parse(
                     "min(A_{3,4},A_{2,4},A_{1,4},A_{2,3},A_{1,3},A_{1,2}, T_3-A_{1,2}-T_4,T_2-A_{1,3}-T_3,"
                     "T_2+A_{1,2}-A_{2,3}-A_{1,3}-T_3, T_1-A_{1,4}-T_2,T_1+A_{1,3}-A_{2,4}-A_{1,4}-T_2,"
                     "T_1+A_{2,3}+A_{1,3}-A_{3,4}-A_{2,4}-A_{1,4}-T_2)"));
  std::mt19937 g(3);
  std::uniform_int_distribution<int> X(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> a(6), t(4);
    for (auto& v : a) v = X(g);
    for (auto& v : t) v = X(g);
    auto [A, B, C, D, E, F] = std::array<Int, 6>{a[0], a[1], a[2], a[3], a[4], a[5]};
    GTPattern want{{t, {t[0] - C, t[1] - E, t[2] - F}, {t[0] - C - B, t[1] - D - E}, {t[0] - A - B - C}}};
    GTPattern got = ch->pattern_of(a, t);
    CHECK(got == want);
    CHECK(ch->params_of(got) == a);
  }
}

TEST_CASE("crystal examples") {
  auto c0 = build_crystal({0, 0, 0});
  CHECK(c0.vertices.size() == 1);
  CHECK(c0.weights[0] == std::vector<Int>{0, 0, 0});
  for (const auto& r : c0.raise) CHECK(!r[0]);
  for (const auto& r : c0.lower) CHECK(!r[0]);

  CHECK(build_crystal({2, 1, 0}).vertices.size() == 8);

  auto c4 = build_crystal({1, 0, 0, 0});
  REQUIRE(c4.vertices.size() == 4);
  CHECK(c4.connected());
  int edges = 0;
  std::vector<int> indeg(4, 0), outdeg(4, 0);
  for (const auto& r : c4.lower)
    for (std::size_t v = 0; v < 4; ++v)
      if (r[v]) {
        ++edges;
        ++outdeg[v];
        ++indeg[*r[v]];
      }
  CHECK(edges == 3);
  for (int v = 0; v < 4; ++v) CHECK((indeg[v] <= 1 && outdeg[v] <= 1));

  std::vector<Var> x{V("x_1"), V("x_2"), V("x_3")};
  CHECK(crystal_character(build_crystal({1, 0, 0}), x) == MPoly::variable(x[0]) + MPoly::variable(x[1]) + MPoly::variable(x[2]));
  CHECK(crystal_character(c0, x) == MPoly(1));
  CHECK_THROWS_AS(build_crystal({0, 1, 0}), std::invalid_argument);
  CHECK(to_dot(c4).find("digraph") == 0);
  CHECK(to_json(c4).find("\"edges\"") != std::string::npos);
}

TEST_CASE("Schur oracle") {
  std::vector<Var> x2{V("x_1"), V("x_2")}, x3{V("x_1"), V("x_2"), V("x_3")};
  auto X = [](Var v) { return MPoly::variable(v); };
  CHECK(schur_oracle({1, 0}, x2) == X(x2[0]) + X(x2[1]));
  CHECK(schur_oracle({1, 1, 0}, x3) == X(x3[0]) * X(x3[1]) + X(x3[0]) * X(x3[2]) + X(x3[1]) * X(x3[2]));
  MPoly s = schur_oracle({2, 1, 0}, x3);
  mpq_class total = 0;
  for (const auto& t : s.terms()) total += t.coef;
  CHECK(total == 8);
  CHECK_THROWS_AS(schur_oracle({0, 1}, x2), std::invalid_argument);
}

TEST_CASE("exhaustive: tropical region, character, highest weight, operators") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Var> x;
    for (int k = 1; k <= n + 1; ++k) x.push_back(V(("x_" + std::to_string(k)).c_str()));
    auto ch = trop_chart(n);
    for (const auto& T : partitions(n + 1, 4)) {
      CAPTURE(n);
      CAPTURE(GTPattern{{T}}.to_string());
      auto c = build_crystal(T);
      std::set<std::vector<Int>> region, from_gt;
      for (auto& a : trop_region(T)) region.insert(a);
      for (const auto& g : c.vertices) {
        CHECK(g.interlacing());
        from_gt.insert(ch->params_of(g));
      }
      CHECK(region == from_gt);
      CHECK(crystal_character(c, x) == schur_oracle(T, x));
      auto hw = c.highest_weight_vertices();
      REQUIRE(hw.size() == 1);
      CHECK(c.weights[hw[0]] == T);
      CHECK(c.connected());
      for (int i = 1; i <= n; ++i)
        for (std::size_t v = 0; v < c.vertices.size(); ++v) {
          if (auto u = c.raise[i - 1][v]) {
            auto w = c.weights[v];
            ++w[i - 1];
            --w[i];
            CHECK(c.weights[*u] == w);
            CHECK(c.lower[i - 1][*u] == v);
          }
          if (auto d = c.lower[i - 1][v]) CHECK(c.raise[i - 1][*d] == v);
        }
    }
  }
}
