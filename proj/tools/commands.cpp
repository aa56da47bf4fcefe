#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "gcrys/checks/checks.hpp"
#include "gcrys/oracle/bessel.hpp"
#include "gcrys/tropical/tropical.hpp"
#include "gcrys/whittaker/whittaker.hpp"

namespace gcrys::cli {

using json = nlohmann::ordered_json;

namespace {

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

std::string fmt(const RunConfig& cfg, const char* fallback) { return cfg.format.empty() ? fallback : cfg.format; }

wh::QuadSpec quad_spec(const RunConfig& cfg) {
  wh::QuadSpec q;
  q.points_per_dim = cfg.points_per_dim;
  q.truncation = cfg.truncation;
  q.validate();
  return q;
}

void require_size(const std::vector<double>& v, std::size_t k, const char* what) {
  if (v.size() != k)
    throw std::invalid_argument(std::string("--") + what + " needs " + std::to_string(k) + " entries for this rank");
}

// rank from --rank unless a vector argument pins it
int rank_from(const RunConfig& cfg, std::size_t len) { return len ? static_cast<int>(len) - 1 : cfg.rank; }

std::string as_csv(const json& j) {
  std::string head, row;
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) continue;
    head += (head.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array() || v.empty() || v.front().is_structured()) continue;
    std::string cell;
    for (const auto& e : v) cell += (cell.empty() ? "" : " ") + e.dump();
    head += "," + k;
    row += "," + cell;
  }
  return head + "\n" + row + "\n";
}

std::vector<std::vector<double>> eigen_points(const std::vector<double>& base) {
  std::vector<std::vector<double>> pts{base};
  for (int k = 1; k <= 4; ++k) {
    auto p = base;
    for (std::size_t j = 0; j < p.size(); ++j) p[j] *= std::exp(0.25 * std::sin(k * (j + 1.0)));
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  checks::Report r = checks::verify(cfg.target, cfg.rank);
  std::string f = fmt(cfg, "json");
  if (f == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    auto body = json::parse(r.to_json());
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(cfg, j.dump(2));
  } else if (f == "text") {
    std::ostringstream os;
    for (const auto& c : r.checks) os << (c.pass ? "pass  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    os << r.target << " n=" << r.n << ": " << (r.ok() ? "all identities hold" : "FAILED") << "\n";
    emit(cfg, os.str());
  } else {
    throw std::invalid_argument("verify writes json or text");
  }
  return r.ok() ? 0 : 1;
}

int cmd_crystal(const RunConfig& cfg) {
  auto T = parse_ints(cfg.weight, "weight");
  const int n = static_cast<int>(T.size()) - 1;
  if (n < 1) throw std::invalid_argument("--weight needs at least two entries");
  if (n > 3) throw std::invalid_argument("crystal supports n <= 3");
  if (!trop::is_dominant(T)) throw std::invalid_argument("non-dominant weight");
  trop::CombCrystal c = trop::build_crystal(T);
  std::vector<alg::Var> x;
  for (int i = 1; i <= n + 1; ++i) x.push_back(alg::Var::intern("x" + std::to_string(i)));
  bool nonneg = true;
  for (auto v : T) nonneg &= v >= 0;
  std::string character, schur;
  bool match = false;
  if (nonneg) {
    alg::MPoly ch = trop::crystal_character(c, x), sc = trop::schur_oracle(T, x);
    character = ch.to_string();
    schur = sc.to_string();
    match = ch == sc;
  } else {
    // shift to a polynomial weight; characters shift by (x_1...x_{n+1})^m
    std::int64_t m = -T.back();
    auto S = T;
    for (auto& v : S) v += m;
    auto cs = trop::build_crystal(S);
    alg::MPoly ch = trop::crystal_character(cs, x), sc = trop::schur_oracle(S, x);
    character = ch.to_string() + " * (" + "x1...x" + std::to_string(n + 1) + ")^" + std::to_string(-m);
    schur = sc.to_string() + " * (" + "x1...x" + std::to_string(n + 1) + ")^" + std::to_string(-m);
    match = ch == sc && cs.vertices.size() == c.vertices.size();
  }
  json j;
  j["schema"] = kSchema;
  j["command"] = "crystal";
  j["crystal"] = json::parse(trop::to_json(c));
  j["vertex_count"] = c.vertices.size();
  j["character"] = character;
  j["schur"] = schur;
  j["character_matches_schur"] = match;
  std::string f = fmt(cfg, "json");
  if (!cfg.out.empty()) {
    std::ofstream dot(cfg.out + ".dot"), js(cfg.out + ".json");
    if (!dot || !js) throw std::runtime_error("cannot write under prefix " + cfg.out);
    dot << trop::to_dot(c);
    js << j.dump(2) << "\n";
    std::cout << cfg.out << ".dot, " << cfg.out << ".json: " << c.vertices.size() << " vertices, character "
              << (match ? "matches" : "DIFFERS FROM") << " the Schur polynomial\n";
  } else if (f == "dot") {
    std::cout << trop::to_dot(c);
  } else if (f == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (f == "text") {
    for (const auto& v : c.vertices) std::cout << v.to_string() << "\n";
    std::cout << "character: " << character << "\nmatches schur: " << (match ? "yes" : "no") << "\n";
  } else {
    throw std::invalid_argument("crystal writes json, dot or text");
  }
  return match ? 0 : 1;
}

int cmd_whittaker(const RunConfig& cfg) {
  const std::string& op = cfg.target;
  json j;
  j["schema"] = kSchema;
  j["command"] = "whittaker";
  j["operation"] = op;
  bool pass = false;
  wh::QuadSpec q = quad_spec(cfg);
  if (op == "eval") {
    auto mu = parse_reals(cfg.mu, "mu");
    auto t = parse_reals(cfg.t, "t");
    int n = rank_from(cfg, mu.size());
    require_size(t, n + 1, "t");
    auto r = wh::psi(mu, t, q);
    j["mu"] = mu;
    j["t"] = t;
    j["points_per_dim"] = cfg.points_per_dim;
    j["value"] = r.value;
    j["log_value"] = r.log_value;
    j["error_estimate"] = r.error_estimate;
    j["node_count"] = r.node_count;
    if (n == 1) {
      double tol = cfg.tol.value_or(1e-8);
      double oracle = oracle::gl2_whittaker(mu[0], mu[1], t[0], t[1]);
      double rel = std::abs(r.value / oracle - 1);
      j["bessel_oracle"] = oracle;
      j["rel_error"] = rel;
      j["tol"] = tol;
      pass = rel <= tol;
    } else {
      double tol = cfg.tol.value_or(1e-6);
      j["tol"] = tol;
      pass = r.error_estimate <= tol * r.value;
    }
  } else if (op == "eigen") {
    std::vector<double> mu = cfg.mu.empty() ? std::vector<double>(cfg.rank + 1, 0.0) : parse_reals(cfg.mu, "mu");
    int n = rank_from(cfg, mu.size());
    std::vector<double> base = cfg.t.empty() ? std::vector<double>(n + 1, 1.0) : parse_reals(cfg.t, "t");
    require_size(base, n + 1, "t");
    auto rep = wh::eigen_check(mu, eigen_points(base), q);
    double tol = cfg.tol.value_or(1e-4);
    j["mu"] = mu;
    j["points"] = rep.points;
    j["ratios"] = rep.ratios;
    j["rejected"] = rep.rejected;
    j["mean"] = rep.mean;
    j["spread"] = rep.spread;
    j["scale"] = rep.scale;
    j["predicted"] = rep.predicted;
    j["prediction_error"] = rep.prediction_error;
    j["tol"] = tol;
    pass = rep.spread <= tol && rep.prediction_error <= tol;
  } else if (op == "cauchy" || op == "pieri") {
    auto lambda = parse_reals(cfg.lambda, "lambda");
    double tol = cfg.tol.value_or(lambda.size() == 1 ? 1e-10 : 1e-4);
    wh::IdentityReport rep;
    j["lambda"] = lambda;
    if (op == "cauchy") {
      auto nu = parse_reals(cfg.nu, "nu");
      j["nu"] = nu;
      j["s"] = cfg.s;
      rep = wh::cauchy_check(lambda, nu, cfg.s, q);
    } else {
      auto y = parse_reals(cfg.y, "y");
      j["gamma"] = cfg.gamma;
      j["y"] = y;
      rep = wh::pieri_check(cfg.gamma, lambda, y, q);
    }
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["rel_error"] = rep.rel_error;
    j["node_count"] = rep.node_count;
    j["tol"] = tol;
    pass = rep.rel_error <= tol;
  } else if (op == "critical") {
    std::vector<double> t = cfg.t.empty() ? std::vector<double>(cfg.rank + 1, 1.0) : parse_reals(cfg.t, "t");
    auto cp = wh::critical_point(t);
    double tol = cfg.tol.value_or(1e-10);
    double spread = wh::uniqueness_probe(t, cfg.starts, cfg.seed);
    j["t"] = t;
    j["z"] = cp.z;
    j["F"] = cp.F;
    j["grad_norm"] = cp.grad_norm;
    j["min_hessian_eigenvalue"] = cp.min_hessian_eigenvalue;
    j["seed"] = cfg.seed;
    j["starts"] = cfg.starts;
    j["uniqueness_spread"] = spread;
    j["tol"] = tol;
    pass = cp.grad_norm <= tol && cp.min_hessian_eigenvalue > 0 && spread <= 1e-8;
  } else {
    throw std::invalid_argument("unknown whittaker operation '" + op + "'");
  }
  j["pass"] = pass;
  std::string f = fmt(cfg, "json");
  if (f == "json")
    emit(cfg, j.dump(2));
  else if (f == "csv")
    emit(cfg, as_csv(j));
  else
    throw std::invalid_argument("whittaker writes json or csv");
  return pass ? 0 : 1;
}

}  // namespace gcrys::cli
