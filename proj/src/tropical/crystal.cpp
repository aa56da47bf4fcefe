#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gcrys/tropical/tropical.hpp"

namespace gcrys::trop {

bool GTPattern::interlacing() const {
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    if (rows[r + 1].size() + 1 != rows[r].size()) return false;
    for (std::size_t c = 0; c < rows[r + 1].size(); ++c)
      if (rows[r + 1][c] > rows[r][c] || rows[r + 1][c] < rows[r][c + 1]) return false;
  }
  return true;
}

std::string GTPattern::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " | ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += " ";
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

bool is_dominant(const std::vector<Int>& T) {
  for (std::size_t k = 0; k + 1 < T.size(); ++k)
    if (T[k] < T[k + 1]) return false;
  return !T.empty();
}

namespace {

void require_dominant(const std::vector<Int>& T) {
  if (T.size() < 2) throw std::invalid_argument("weight needs at least two entries");
  if (!is_dominant(T)) throw std::invalid_argument("weight is not dominant (must be weakly decreasing)");
}

void dfs(GTPattern& g, std::size_t r, std::size_t c, std::vector<GTPattern>& out) {
  if (r + 1 == g.rows.size()) {
    out.push_back(g);
    return;
  }
  const auto& up = g.rows[r];
  if (c == up.size() - 1) {
    dfs(g, r + 1, 0, out);
    return;
  }
  if (c == 0) g.rows[r + 1].assign(up.size() - 1, 0);
  for (Int v = up[c + 1]; v <= up[c]; ++v) {
    g.rows[r + 1][c] = v;
    dfs(g, r, c + 1, out);
  }
}

}  // namespace

std::vector<GTPattern> gt_patterns(const std::vector<Int>& T) {
  require_dominant(T);
  GTPattern g;
  g.rows.assign(T.size(), {});
  g.rows[0] = T;
  std::vector<GTPattern> out;
  dfs(g, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Int>> trop_region(const std::vector<Int>& T) {
  require_dominant(T);
  auto ch = trop_chart(static_cast<int>(T.size()) - 1);
  Int hi = T.front() - T.back();
  std::size_t m = ch->A.size();
  std::vector<Int> a(m, 0);
  std::vector<std::vector<Int>> out;
  for (;;) {
    if (ch->F.eval(ch->env(a, T)) >= 0) out.push_back(a);
    std::size_t k = 0;
    while (k < m && a[k] == hi) a[k++] = 0;
    if (k == m) break;
    ++a[k];
  }
  return out;
}

std::optional<std::size_t> CombCrystal::find(const GTPattern& g) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), g);
  if (it == vertices.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

CombCrystal build_crystal(const std::vector<Int>& T) {
  require_dominant(T);
  int n = static_cast<int>(T.size()) - 1;
  auto ch = trop_chart(n);
  CombCrystal c;
  c.n = n;
  c.T = T;
  c.vertices = gt_patterns(T);
  std::size_t N = c.vertices.size();
  for (const auto& g : c.vertices) {
    auto a = ch->params_of(g);
    auto env = ch->env(a, T);
    std::vector<Int> w;
    for (const auto& gm : ch->gamma) w.push_back(gm.eval(env));
    c.params.push_back(std::move(a));
    c.weights.push_back(std::move(w));
  }
  c.raise.assign(n, std::vector<std::optional<std::size_t>>(N));
  c.lower.assign(n, std::vector<std::optional<std::size_t>>(N));
  for (int i = 1; i <= n; ++i)
    for (int dir : {1, -1}) {
      std::vector<TropExpr> op;
      for (const auto& e : ch->e[i - 1]) op.push_back(e.substitute(ch->P, dir));
      for (std::size_t v = 0; v < N; ++v) {
        auto env = ch->env(c.params[v], T);
        std::vector<Int> a2;
        for (const auto& e : op) a2.push_back(e.eval(env));
        if (ch->F.eval(ch->env(a2, T)) < 0) continue;
        auto idx = c.find(ch->pattern_of(a2, T));
        if (!idx) throw std::logic_error("tropical operator image satisfies trop(F) >= 0 but is not a Gelfand-Tsetlin pattern");
        (dir == 1 ? c.raise : c.lower)[i - 1][v] = idx;
      }
    }
  return c;
}

std::vector<std::size_t> CombCrystal::highest_weight_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    bool top = true;
    for (const auto& r : raise) top = top && !r[v];
    if (top) out.push_back(v);
  }
  return out;
}

bool CombCrystal::connected() const {
  if (vertices.empty()) return true;
  std::vector<char> seen(vertices.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto* edges : {&raise, &lower})
      for (const auto& r : *edges)
        if (r[v] && !seen[*r[v]]) {
          seen[*r[v]] = 1;
          ++count;
          stack.push_back(*r[v]);
        }
  }
  return count == vertices.size();
}

MPoly crystal_character(const CombCrystal& c, const std::vector<Var>& x) {
  if (x.size() != static_cast<std::size_t>(c.n + 1)) throw std::invalid_argument("need n+1 variables for the character");
  MPoly out;
  for (const auto& w : c.weights) {
    alg::Monomial::Storage pows;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] < 0) throw std::domain_error("negative weight; the character is a Laurent polynomial");
      if (w[k] > 0) pows.push_back({x[k], static_cast<std::uint32_t>(w[k])});
    }
    out += MPoly::monomial(alg::Monomial::from_pairs(std::move(pows)));
  }
  return out;
}

std::string to_dot(const CombCrystal& c) {
  static const char* colors[] = {"red", "blue", "darkgreen", "orange", "purple"};
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << c.vertices[v].to_string() << "\\nwt";
    for (auto w : c.weights[v]) os << " " << w;
    os << "\"];\n";
  }
  // arrows follow the lowering operators f_i
  for (int i = 1; i <= c.n; ++i)
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
      if (auto t = c.lower[i - 1][v])
        os << "  v" << v << " -> v" << *t << " [label=\"" << i << "\", color=" << colors[(i - 1) % 5] << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const CombCrystal& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["highest_weight"] = c.T;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    vs.push_back({{"id", v}, {"rows", c.vertices[v].rows}, {"params", c.params[v]}, {"weight", c.weights[v]}});
  auto& es = j["edges"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= c.n; ++i)
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
      if (auto t = c.lower[i - 1][v]) es.push_back({{"from", v}, {"to", *t}, {"color", i}, {"op", "f"}});
  return j.dump(2);
}

}  // namespace gcrys::trop
