#include <doctest.h>

#include <random>
#include <set>

#include "gcrys/lie/group.hpp"
#include "support.hpp"

using namespace gcrys::lie;
using gcrys::alg::var;

namespace {

RatExpr P(const char* s) { return RatExpr::parse(s); }

std::vector<RatExpr> vars(std::initializer_list<const char*> names) {
  std::vector<RatExpr> v;
  for (auto n : names) v.push_back(var(n));
  return v;
}

std::set<std::vector<int>> all_reduced_words(RankSpec r) {
  std::set<std::vector<int>> seen{longest_word_lex(r).letters()};
  std::vector<std::vector<int>> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      auto v = w;
      if (std::abs(w[p] - w[p + 1]) >= 2) {
        std::swap(v[p], v[p + 1]);
      } else if (p + 2 < w.size() && w[p + 2] == w[p] && std::abs(w[p] - w[p + 1]) == 1) {
        v[p] = v[p + 2] = w[p + 1];
        v[p + 1] = w[p];
      } else {
        continue;
      }
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("generators match the displayed patterns") {
  RankSpec r4(4 - 1);
  GroupElt x2 = gen(r4, GenKind::x, 2, var("a"));
  SqMatrix want = SqMatrix::identity(4);
  want(1, 2) = var("a");
  CHECK(x2.matrix() == want);
  CHECK(mat_mul(x2.matrix(), SqMatrix::identity(4)) == want);

  GroupElt xm3 = gen(r4, GenKind::x_neg, 3, var("a"));
  SqMatrix want2 = SqMatrix::identity(4);
  want2(2, 2) = P("1/a");
  want2(3, 2) = 1;
  want2(3, 3) = var("a");
  CHECK(xm3.matrix() == want2);
  CHECK(xm3 == gen(r4, GenKind::y, 3, var("a")) * gen(r4, GenKind::alpha_check, 3, P("1/a")));

  CHECK(gen(r4, GenKind::x, 1, 0).matrix().is_identity());
  CHECK_THROWS_AS(gen(r4, GenKind::x, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen(r4, GenKind::x_neg, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen(r4, GenKind::alpha_check, 1, 0), std::invalid_argument);
}

TEST_CASE("words are validated") {
  RankSpec r(2);
  CHECK_THROWS_AS(ReducedWord(r, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord(r, {3}), std::invalid_argument);
  CHECK(longest_word_lex(r).letters() == std::vector<int>{1, 2, 1});
  CHECK(standard_word(RankSpec(3)).letters() == std::vector<int>{3, 2, 1, 3, 2, 3});
  CHECK(parse_word(RankSpec(3), "3,2,1,3,2,3") == standard_word(RankSpec(3)));
  CHECK(parse_word(RankSpec(3), "321323") == standard_word(RankSpec(3)));
  CHECK(all_reduced_words(RankSpec(3)).size() == 16);
}

TEST_CASE("word products") {
  RankSpec r(2);
  auto abc = vars({"a", "b", "c"});
  GroupElt u = word_product(WordKind::x, ReducedWord(r, {2, 1, 2}), abc);
  CHECK(u.matrix() == SqMatrix::from_rows({{1, var("b"), P("b*c")}, {0, 1, P("a+c")}, {0, 0, 1}}));
  CHECK(word_product(WordKind::x, ReducedWord(r, {}), {}).matrix().is_identity());
  CHECK_THROWS_AS(word_product(WordKind::x, ReducedWord(r, {2, 1}), abc), std::invalid_argument);
}

TEST_CASE("chi on unipotent and factored elements") {
  RankSpec r(3);
  SqMatrix m = SqMatrix::from_rows({{1, var("a"), var("p"), var("q")},
                                    {0, 1, var("b"), var("s")},
                                    {0, 0, 1, var("c")},
                                    {0, 0, 0, 1}});
  CHECK(chi(GroupElt(r, m)) == P("a+b+c"));
  CHECK(chi(GroupElt::identity(r)).is_zero());
  RankSpec r2(2);
  GroupElt u = word_product(WordKind::x, ReducedWord(r2, {2, 1, 2}), vars({"a", "b", "c"}));
  CHECK(chi(twist(u).tau) == P("1/c + (a+c)/(a*b)"));
  GroupElt lower = GroupElt(r2, SqMatrix::from_rows({{2, 0, 0}, {var("a"), 1, 0}, {1, 1, 1}}));
  CHECK(chi(lower * u) == chi(u));
  GroupElt bad(r2, SqMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(chi(bad), std::domain_error);
}

TEST_CASE("gauss projection") {
  RankSpec r(2);
  GroupElt low(r, SqMatrix::from_rows({{var("a"), 0, 0}, {var("b"), var("c"), 0}, {1, var("d"), var("e")}}));
  auto f = gauss_project(low);
  CHECK(f.lower == low);
  CHECK(f.upper.matrix().is_identity());

  GroupElt g(r, SqMatrix::from_rows({{var("a"), var("b"), var("c")}, {var("d"), var("e"), var("f")}, {var("g"), var("h"), var("k")}}));
  auto gf = gauss_project(g);
  CHECK(gf.lower.is_lower_triangular());
  CHECK(gf.upper.is_upper_unipotent());
  CHECK(gf.lower * gf.upper == g);

  GroupElt bad(r, SqMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  try {
    gauss_project(bad);
    FAIL("expected failure");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("order 1") != std::string::npos);
  }
}

TEST_CASE("SL3 example: eta and tau") {
  RankSpec r(2);
  auto abc = vars({"a", "b", "c"});
  GroupElt u = word_product(WordKind::x, ReducedWord(r, {2, 1, 2}), abc);
  GroupElt w0 = w0_bar(r);
  CHECK(w0.matrix() == SqMatrix::from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
  CHECK(gauss_project(u * w0).lower.matrix() ==
        SqMatrix::from_rows({{P("b*c"), 0, 0}, {P("a+c"), P("a/c"), 0}, {1, P("1/c"), P("1/(a*b)")}}));
  auto tw = twist(u);
  CHECK(tw.tau.matrix() == SqMatrix::from_rows({{1, P("1/c"), P("1/(a*b)")}, {0, 1, P("(a+c)/(a*b)")}, {0, 0, 1}}));
  CHECK(u * w0 * tw.tau == tw.eta);
  CHECK(tw.eta == word_product(WordKind::x_neg, ReducedWord(r, {1, 2, 1}), std::vector<RatExpr>{P("1/b"), P("1/(a*b)"), P("1/c")}));
  CHECK(twist_inverse(tw.eta) == u);
}

TEST_CASE("x_i y_i exchange relation and commuting generators") {
  for (int n : {2, 3}) {
    RankSpec r(n);
    RatExpr a = var("a"), b = var("b");
    for (int i = 1; i <= n; ++i) {
      RatExpr s = 1 + a * b;
      CHECK(gen(r, GenKind::x, i, a) * gen(r, GenKind::y, i, b) ==
            gen(r, GenKind::y, i, b / s) * gen(r, GenKind::alpha_check, i, s) * gen(r, GenKind::x, i, a / s));
      for (int j = 1; j <= n; ++j)
        if (j != i) CHECK(gen(r, GenKind::x, i, a) * gen(r, GenKind::y, j, b) == gen(r, GenKind::y, j, b) * gen(r, GenKind::x, i, a));
    }
  }
}

TEST_CASE("braid moves") {
  RankSpec r(2);
  auto abc = vars({"a", "b", "c"});
  ReducedWord w(r, {1, 2, 1});
  auto mx = braid_move(WordKind::x, w, abc, 0);
  CHECK(mx.word.letters() == std::vector<int>{2, 1, 2});
  CHECK(mx.params == std::vector<RatExpr>{P("b*c/(a+c)"), P("a+c"), P("a*b/(a+c)")});
  auto mn = braid_move(WordKind::x_neg, w, abc, 0);
  CHECK(mn.params[1] == P("a*c"));
  CHECK(mn.params[2] == P("a+b/c"));
  CHECK(word_product(WordKind::x_neg, mn.word, mn.params) == word_product(WordKind::x_neg, w, abc));
  // the other parse of the third parameter breaks the identity
  std::vector<RatExpr> wrong = mn.params;
  wrong[2] = P("(a+b)/c");
  CHECK_FALSE(word_product(WordKind::x_neg, mn.word, wrong) == word_product(WordKind::x_neg, w, abc));

  RankSpec r3(3);
  auto m2 = braid_move(WordKind::x, ReducedWord(r3, {1, 3}), vars({"a", "b"}), 0);
  CHECK(m2.word.letters() == std::vector<int>{3, 1});
  CHECK(m2.params == vars({"b", "a"}));
  CHECK_THROWS_AS(braid_move(WordKind::x, ReducedWord(r3, {1, 2}), vars({"a", "b"}), 0), std::invalid_argument);
}

TEST_CASE("random braid walks preserve products and return to the start") {
  std::mt19937_64 g(42);
  for (int n : {2, 3}) {
    RankSpec r(n);
    ReducedWord w0 = longest_word_lex(r);
    std::vector<RatExpr> params;
    for (std::size_t k = 0; k < w0.length(); ++k) params.push_back(var(("p" + std::to_string(k)).c_str()));
    for (WordKind kind : {WordKind::x, WordKind::x_neg}) {
      GroupElt target = word_product(kind, w0, params);
      ReducedWord w = w0;
      std::vector<RatExpr> cur = params;
      std::vector<std::size_t> path;
      for (int step = 0; step < 6; ++step) {
        std::vector<std::size_t> options;
        for (std::size_t p = 0; p + 1 < w.length(); ++p) {
          int i = w[p], j = w[p + 1];
          if (std::abs(i - j) >= 2 || (p + 2 < w.length() && w[p + 2] == i && std::abs(i - j) == 1)) options.push_back(p);
        }
        std::size_t p = options[g() % options.size()];
        auto res = braid_move(kind, w, cur, p);
        w = res.word;
        cur = res.params;
        path.push_back(p);
      }
      CHECK(word_product(kind, w, cur) == target);
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto res = braid_move(kind, w, cur, *it);
        w = res.word;
        cur = res.params;
      }
      CHECK(w == w0);
      CHECK(cur == params);
    }
  }
}

TEST_CASE("s_bar braid relations and word independence of w0") {
  for (int n : {2, 3}) {
    RankSpec r(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (std::abs(i - j) == 1)
          CHECK(s_bar(r, i) * s_bar(r, j) * s_bar(r, i) == s_bar(r, j) * s_bar(r, i) * s_bar(r, j));
        else if (i != j)
          CHECK(s_bar(r, i) * s_bar(r, j) == s_bar(r, j) * s_bar(r, i));
      }
    GroupElt ref = w0_bar(r);
    for (const auto& letters : all_reduced_words(r)) CHECK(w0_bar(ReducedWord(r, letters)) == ref);
  }
}

TEST_CASE("twist round trips on generic GL3 points") {
  RankSpec r(2);
  for (const auto& letters : all_reduced_words(r)) {
    ReducedWord w(r, letters);
    GroupElt u = word_product(WordKind::x, w, vars({"a", "b", "c"}));
    auto tw = twist(u);
    CHECK(tw.eta.is_lower_triangular());
    CHECK(u * w0_bar(r) * tw.tau == tw.eta);
    CHECK(twist_inverse(tw.eta) == u);
    // the other direction, starting from a point of the x_neg chart
    GroupElt x = word_product(WordKind::x_neg, w, vars({"e", "f", "g"}));
    CHECK(twist(twist_inverse(x)).eta == x);
  }
}

TEST_CASE("monomial split") {
  RankSpec r1(1);
  ReducedWord w1(r1, {1});
  auto s1 = monomial_split(w1, vars({"a"}));
  CHECK(s1.torus_part == gen(r1, GenKind::alpha_check, 1, var("a")));
  CHECK(s1.transformed == vars({"a"}));
  CHECK(gen(r1, GenKind::x, 1, var("a")) == s1.torus_part * gen(r1, GenKind::x_neg, 1, var("a")).transpose());

  for (int n : {2, 3}) {
    RankSpec r(n);
    for (ReducedWord w : {longest_word_lex(r), standard_word(r)}) {
      std::vector<RatExpr> params;
      for (std::size_t k = 0; k < w.length(); ++k) params.push_back(var(("q" + std::to_string(k)).c_str()));
      auto s = monomial_split(w, params);
      std::vector<RatExpr> rev(s.transformed.rbegin(), s.transformed.rend());
      CHECK(word_product(WordKind::x, w, params) == s.torus_part * word_product(WordKind::x_neg, w.reversed(), rev).transpose());
      std::vector<RatExpr> ones(w.length(), RatExpr(1));
      CHECK(monomial_split(w, ones).torus_part.matrix().is_identity());
    }
  }
  // GL4 standard word: the torus part is the t-free part of the weight
  RankSpec r3(3);
  auto s = monomial_split(standard_word(r3), vars({"a", "b", "c", "d", "e", "f"}));
  CHECK(s.torus_part.diagonal() == std::vector<RatExpr>{P("c*e*f"), P("b*d/f"), P("a/(d*e)"), P("1/(a*b*c)")});
}

TEST_CASE("chart solving inverts word products") {
  for (int n : {1, 2, 3}) {
    RankSpec r(n);
    for (ReducedWord w : {longest_word_lex(r), standard_word(r)}) {
      std::vector<RatExpr> params;
      for (std::size_t k = 0; k < w.length(); ++k) params.push_back(var(("q" + std::to_string(k)).c_str()));
      CHECK(solve_chart(w, word_product(WordKind::x, w, params)) == params);
    }
  }
}
