#include <map>
#include <mutex>
#include <stdexcept>

#include "gcrys/crystal/crystal.hpp"
#include "gcrys/tropical/tropical.hpp"

namespace gcrys::trop {

namespace {

std::shared_ptr<const TropChart> make_chart(int n) {
  using namespace gcrys::crystal;
  RankSpec r(n);
  auto hw = HighestWeight::symbolic(r);
  auto word = lie::standard_word(r);
  auto a = standard_params(r);
  auto chart = std::make_shared<TropChart>();
  chart->n = n;
  for (const auto& x : a) chart->A.push_back(trop_var(x.variables().front()));
  for (const auto& t : hw.t) chart->T.push_back(trop_var(t.variables().front()));
  RatExpr p = RatExpr::variable("p");
  chart->P = trop_var(p.variables().front());

  chart->F = tropicalize(decoration_closed_form(word, a, hw));
  for (const auto& g : weight_formula(word, a, hw)) chart->gamma.push_back(tropicalize(g));

  CrystalPoint pt = build_point(hw, word, a);
  for (int i = 1; i <= n; ++i) {
    std::vector<TropExpr> row;
    for (const auto& c : e_action(pt, i, p).params) row.push_back(tropicalize(c));
    chart->e.push_back(std::move(row));
  }

  GtArray z = gt_change_of_variables(a, hw);
  for (int i = 1; i <= n; ++i) {
    std::vector<TropExpr> row;
    for (const auto& v : z[i - 1]) row.push_back(tropicalize(v));
    chart->to_gt.push_back(std::move(row));
  }
  GtArray zs = symbolic_gt(hw);
  for (int i = 1; i <= n; ++i) {
    std::vector<Var> row;
    for (const auto& v : zs[i - 1]) row.push_back(trop_var(v.variables().front()));
    chart->Z.push_back(std::move(row));
  }
  for (const auto& v : params_from_gt(zs)) chart->from_gt.push_back(tropicalize(v));
  return chart;
}

}  // namespace

std::shared_ptr<const TropChart> trop_chart(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("tropical chart supports 1 <= n <= 4, got " + std::to_string(n));
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TropChart>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_chart(n);
  return slot;
}

// Display row r of the pattern lists z_{s,s}, ..., z_{s,1} with s = n+1-r.
std::vector<Int> TropChart::params_of(const GTPattern& g) const {
  if (g.rank() != n) throw std::invalid_argument("pattern rank does not match chart");
  std::unordered_map<Var, Int> env;
  for (int j = 0; j <= n; ++j) env[T[j]] = g.rows[0][j];
  for (int s = 1; s <= n; ++s)
    for (int j = 1; j <= s; ++j) env[Z[s - 1][j - 1]] = g.rows[n + 1 - s][s - j];
  std::vector<Int> out;
  for (const auto& e : from_gt) out.push_back(e.eval(env));
  return out;
}

std::unordered_map<Var, Int> TropChart::env(const std::vector<Int>& a, const std::vector<Int>& t) const {
  std::unordered_map<Var, Int> m;
  for (std::size_t k = 0; k < A.size(); ++k) m[A[k]] = a.at(k);
  for (std::size_t k = 0; k < T.size(); ++k) m[T[k]] = t.at(k);
  return m;
}

GTPattern TropChart::pattern_of(const std::vector<Int>& a, const std::vector<Int>& t) const {
  auto m = env(a, t);
  GTPattern g;
  g.rows.assign(n + 1, {});
  g.rows[0] = t;
  for (int s = 1; s <= n; ++s) {
    auto& row = g.rows[n + 1 - s];
    row.resize(s);
    for (int j = 1; j <= s; ++j) row[s - j] = to_gt[s - 1][j - 1].eval(m);
  }
  return g;
}

}  // namespace gcrys::trop
