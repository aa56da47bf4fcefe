#include <chrono>

#include "gcrys/checks/checks.hpp"
#include "gcrys/crystal/crystal.hpp"
#include "gcrys/tropical/tropical.hpp"

namespace gcrys::checks {

using alg::RatExpr;
using alg::SqMatrix;
using alg::var;
using lie::RankSpec;
using lie::ReducedWord;
using lie::WordKind;

namespace {

RatExpr P(const char* s) { return RatExpr::parse(s); }

std::vector<RatExpr> syms(std::initializer_list<const char*> names) {
  std::vector<RatExpr> v;
  for (auto n : names) v.push_back(var(n));
  return v;
}

}  // namespace

Report golden_examples() {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.target = "golden";
  rep.n = 3;
  auto expect = [&](std::string name, auto&& body) {
    Check c{std::move(name), false, {}};
    try {
      c.pass = body();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
  };

  // GL_3, word (2,1,2)
  RankSpec r2(2);
  auto u = lie::word_product(WordKind::x, ReducedWord(r2, {2, 1, 2}), syms({"a", "b", "c"}));
  expect("GL3 u", [&] { return u.matrix() == SqMatrix::from_rows({{1, var("b"), P("b*c")}, {0, 1, P("a+c")}, {0, 0, 1}}); });
  auto tw = lie::twist(u);
  expect("GL3 eta(u)", [&] {
    return tw.eta.matrix() == SqMatrix::from_rows({{P("b*c"), 0, 0}, {P("a+c"), P("a/c"), 0}, {1, P("1/c"), P("1/(a*b)")}});
  });
  expect("GL3 tau(u)", [&] {
    return tw.tau.matrix() == SqMatrix::from_rows({{1, P("1/c"), P("1/(a*b)")}, {0, 1, P("(a+c)/(a*b)")}, {0, 0, 1}});
  });
  expect("GL3 eta(u) = x_-1(1/b) x_-2(1/(ab)) x_-1(1/c)", [&] {
    return tw.eta == lie::word_product(WordKind::x_neg, ReducedWord(r2, {1, 2, 1}), std::vector<RatExpr>{P("1/b"), P("1/(a*b)"), P("1/c")});
  });

  // GL_4, word (3,2,1,3,2,3)
  auto hw = crystal::HighestWeight::of(syms({"t1", "t2", "t3", "t4"}));
  auto p = crystal::build_point(hw, ReducedWord(RankSpec(3), {3, 2, 1, 3, 2, 3}), syms({"a", "b", "c", "d", "e", "f"}));
  expect("GL4 x", [&] {
    return p.x.matrix() == SqMatrix::from_rows({
                               {P("c*e*f*t4"), 0, 0, 0},
                               {P("(e*f+b*d+b*f)*t4"), P("b*d*t3/f"), 0, 0},
                               {P("(a+d+f)*t4"), P("(a+d)*t3/f"), P("a*t2/(d*e)"), 0},
                               {P("t4"), P("t3/f"), P("t2/(d*e)"), P("t1/(a*b*c)")},
                           });
  });
  expect("GL4 u'", [&] {
    return crystal::factor_point(p).u2.matrix() == SqMatrix::from_rows({
                                                       {1, P("t3/(f*t4)"), P("t2/(d*e*t4)"), P("t1/(a*b*c*t4)")},
                                                       {0, 1, P("(d+f)*t2/(d*e*t3)"), P("(a+d+f)*t1/(a*b*c*t3)")},
                                                       {0, 0, 1, P("(d*e+a*b+a*e)*t1/(a*b*c*t2)")},
                                                       {0, 0, 0, 1},
                                                   });
  });
  auto m = crystal::maps_of(p);
  expect("GL4 F", [&] {
    return m.F == P("a+b+c+d+e+f + t3/(f*t4) + (d+f)*t2/(d*e*t3) + (d*e+a*b+a*e)*t1/(a*b*c*t2)");
  });
  expect("GL4 phi_2", [&] { return m.phi[1] == P("(a+d)/(b*d)"); });
  expect("GL4 eps_2", [&] { return m.eps[1] == P("d*e*(a+d)*t3/(a*f*t2)"); });
  auto q = crystal::e_action(p, 2, var("p"));
  expect("GL4 e_2^p x", [&] {
    return q.x.matrix() == SqMatrix::from_rows({
                               {P("c*e*f*t4"), 0, 0, 0},
                               {P("(d*(e*f+b*d*p+b*f*p)+a*(e*f+b*f+b*d*p))*t4/(a+d)"), P("b*d*p*t3/f"), 0, 0},
                               {P("(a+d+f)*t4"), P("(a+d)*t3/f"), P("a*t2/(d*e*p)"), 0},
                               {P("t4"), P("t3/f"), P("(a*t2+d*p*t2)/(e*p*d^2+a*e*p*d)"), P("t1/(a*b*c)")},
                           });
  });
  expect("GL4 a'", [&] { return q.params[0] == P("a*(a+d)/(a+d*p)"); });
  expect("GL4 b'", [&] { return q.params[1] == P("b*(a+d*p)/(a+d)"); });
  expect("GL4 d'", [&] { return q.params[3] == P("d*p*(a+d)/(a+d*p)"); });
  expect("GL4 other coordinates fixed", [&] { return q.params[2] == var("c") && q.params[4] == var("e") && q.params[5] == var("f"); });
  expect("GL4 trop(F)", [&] {
    return trop::tropicalize(m.F) ==
           trop::TropExpr::parse("min(A,B,C,D,E,F, T3-F-T4,T2-E-T3,T2+F-D-E-T3, T1-C-T2,T1+E-B-C-T2,T1+D+E-A-B-C-T2)");
  });
  expect("GL4 D' at P = 1", [&] {
    auto Dp = trop::tropicalize(q.params[3]).substitute(alg::Var::intern("P"), 1);
    return Dp.to_string() == "min(A+D+1, 2*D+1) - min(A, D+1)";
  });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gcrys::checks
