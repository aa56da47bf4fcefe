#include <json.hpp>
#include <stdexcept>

#include "gcrys/crystal/crystal.hpp"

namespace gcrys::crystal {

HighestWeight HighestWeight::symbolic(RankSpec r) {
  std::vector<RatExpr> t;
  for (int j = 1; j <= r.size(); ++j) t.push_back(RatExpr::variable("t_" + std::to_string(j)));
  return of(std::move(t));
}

HighestWeight HighestWeight::of(std::vector<RatExpr> t) {
  if (t.size() < 2) throw std::invalid_argument("highest weight needs at least two entries");
  HighestWeight hw;
  hw.totally_positive = true;
  for (const auto& e : t) {
    if (e.is_zero()) throw std::invalid_argument("highest weight with a zero entry");
    if (!e.is_constant() || e.constant_value() <= 0) hw.totally_positive = false;
  }
  hw.t = std::move(t);
  return hw;
}

GroupElt HighestWeight::matrix() const { return GroupElt::torus(rank(), t); }

GroupElt HighestWeight::reversed_matrix() const {
  return GroupElt::torus(rank(), std::vector<RatExpr>(t.rbegin(), t.rend()));
}

CrystalPoint build_point(const HighestWeight& hw, const ReducedWord& word, std::vector<RatExpr> params) {
  if (!(word.rank() == hw.rank())) throw std::invalid_argument("build_point: word and highest weight have different rank");
  if (!word.is_longest()) throw std::invalid_argument("build_point: " + word.to_string() + " is not a reduced word for w0");
  if (params.size() != word.length()) throw std::invalid_argument("build_point: wrong number of chart parameters");
  for (std::size_t k = 0; k < params.size(); ++k)
    if (params[k].is_zero()) throw std::domain_error("build_point: chart parameter " + std::to_string(k + 1) + " vanishes");
  GroupElt u = lie::word_product(lie::WordKind::x, word, params);
  GroupElt x = lie::twist(u).eta * hw.reversed_matrix();
  return {hw, word, std::move(params), std::move(x)};
}

Factorization factor_point(const CrystalPoint& p) {
  GroupElt u1 = lie::word_product(lie::WordKind::x, p.word, p.params);
  GroupElt u2 = (u1 * p.hw.matrix() * lie::w0_bar(p.hw.rank())).inverse() * p.x;
  if (!u2.is_upper_unipotent()) throw std::logic_error("factor_point: second factor is not unipotent");
  return {std::move(u1), std::move(u2)};
}

std::size_t standard_index(RankSpec r, int i, int j) {
  const int n = r.n;
  if (i < 1 || j > n + 1 || i >= j) throw std::invalid_argument("standard_index: need 1 <= i < j <= n+1");
  int block = n + 2 - j;
  int letter = i + n + 1 - j;
  int offset = 0;
  for (int s = 1; s < block; ++s) offset += n - s + 1;
  return static_cast<std::size_t>(offset + (n - letter));
}

std::vector<RatExpr> standard_params(RankSpec r) {
  std::vector<RatExpr> out(r.longest_length());
  for (int j = 2; j <= r.size(); ++j)
    for (int i = 1; i < j; ++i)
      out[standard_index(r, i, j)] = RatExpr::variable("a_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  return out;
}

RatExpr std_param(const std::vector<RatExpr>& params, RankSpec r, int i, int j) { return params.at(standard_index(r, i, j)); }

RatExpr std_weight(const HighestWeight& hw, int j) { return hw.t.at(hw.t.size() - static_cast<std::size_t>(j)); }

std::string to_json(const CrystalPoint& p) {
  nlohmann::ordered_json j;
  j["n"] = p.hw.rank().n;
  j["word"] = p.word.letters();
  std::vector<std::string> ps, ts;
  for (const auto& a : p.params) ps.push_back(a.to_string());
  for (const auto& t : p.hw.t) ts.push_back(t.to_string());
  j["params"] = ps;
  j["hw"] = ts;
  return j.dump();
}

CrystalPoint point_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  RankSpec r(j.at("n").get<int>());
  ReducedWord w(r, j.at("word").get<std::vector<int>>());
  std::vector<RatExpr> params, t;
  for (const auto& s : j.at("params")) params.push_back(RatExpr::parse(s.get<std::string>()));
  for (const auto& s : j.at("hw")) t.push_back(RatExpr::parse(s.get<std::string>()));
  return build_point(HighestWeight::of(std::move(t)), w, std::move(params));
}

}  // namespace gcrys::crystal
