#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gcrys::cli {

inline constexpr const char* kSchema = "gcrys/1";

struct RunConfig {
  std::string command;  // verify | crystal | whittaker
  std::string target;   // verify target or whittaker sub-operation
  int rank = 2;
  std::string word;
  std::string weight;
  std::string mu, t, lambda, nu, y;
  double s = 1.0;
  double gamma = 1.5;
  int points_per_dim = 41;
  std::optional<double> truncation;
  std::optional<double> tol;
  std::string format;  // json | csv | dot | text; empty picks the command default
  std::string out;
  std::uint64_t seed = 1;
  int starts = 10;
};

// flat key=value file; '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& path);
// "--key=value" tokens, to be placed ahead of the real arguments so flags win
std::vector<std::string> config_tokens(const std::map<std::string, std::string>& kv);

std::vector<double> parse_reals(const std::string& text, const char* what);
std::vector<std::int64_t> parse_ints(const std::string& text, const char* what);

// each returns the process exit code
int cmd_verify(const RunConfig& cfg);
int cmd_crystal(const RunConfig& cfg);
int cmd_whittaker(const RunConfig& cfg);

}  // namespace gcrys::cli
