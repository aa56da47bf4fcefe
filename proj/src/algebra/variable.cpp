#include "gcrys/algebra/variable.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace gcrys::alg {
namespace {

struct Registry {
  std::mutex mu;
  std::unordered_map<std::string, std::unique_ptr<std::string>> names;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool Var::valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  if (!alpha(name[0])) return false;
  for (char c : name) {
    bool ok = alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '{' || c == '}' || c == ',';
    if (!ok) return false;
  }
  return true;
}

Var Var::intern(std::string_view name) {
  if (!valid_name(name)) throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.names.find(std::string(name));
  if (it != r.names.end()) return Var(it->second.get());
  auto p = std::make_unique<std::string>(name);
  const std::string* raw = p.get();
  r.names.emplace(std::string(name), std::move(p));
  return Var(raw);
}

Var Var::declare(std::string_view name) {
  if (!valid_name(name)) throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (r.names.count(std::string(name)))
    throw std::invalid_argument("variable '" + std::string(name) + "' already declared");
  auto p = std::make_unique<std::string>(name);
  const std::string* raw = p.get();
  r.names.emplace(std::string(name), std::move(p));
  return Var(raw);
}

Var Var::fresh(std::string_view prefix) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  for (unsigned long k = 0;; ++k) {
    std::string name = std::string(prefix) + std::to_string(k);
    if (!r.names.count(name)) {
      if (!valid_name(name)) throw std::invalid_argument("invalid variable prefix '" + std::string(prefix) + "'");
      auto p = std::make_unique<std::string>(name);
      const std::string* raw = p.get();
      r.names.emplace(name, std::move(p));
      return Var(raw);
    }
  }
}

std::optional<Var> Var::find(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.names.find(std::string(name));
  if (it == r.names.end()) return std::nullopt;
  return Var(it->second.get());
}

}  // namespace gcrys::alg
