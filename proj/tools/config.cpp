#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"

namespace gcrys::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
    if (key == "config") throw std::runtime_error(path + ":" + std::to_string(lineno) + ": nested config files are not supported");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::vector<std::string> config_tokens(const std::map<std::string, std::string>& kv) {
  std::vector<std::string> out;
  for (const auto& [k, v] : kv) out.push_back("--" + k + "=" + v);
  return out;
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument(std::string("bad number in --") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string("--") + what + " is required");
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (double v : parse_reals(text, what)) {
    if (v != static_cast<double>(static_cast<std::int64_t>(v)))
      throw std::invalid_argument(std::string("--") + what + " needs integers");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace gcrys::cli
