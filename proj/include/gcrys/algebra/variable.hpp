#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace gcrys::alg {

// Interned symbol. Identity is pointer identity; ordering is by name so that
// printed output does not depend on interning order.
class Var {
 public:
  Var() = default;

  // Returns the existing symbol or creates it.
  static Var intern(std::string_view name);
  // Creates a symbol; throws if the name is already taken.
  static Var declare(std::string_view name);
  // Creates a symbol `prefix<k>` with the first unused k.
  static Var fresh(std::string_view prefix);
  static std::optional<Var> find(std::string_view name);

  static bool valid_name(std::string_view name);

  const std::string& name() const { return *name_; }
  bool is_null() const { return name_ == nullptr; }

  friend bool operator==(Var a, Var b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Var a, Var b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name() <=> b.name();
  }

  std::size_t hash() const { return std::hash<const void*>{}(name_); }

 private:
  explicit Var(const std::string* n) : name_(n) {}
  const std::string* name_ = nullptr;
};

}  // namespace gcrys::alg

template <>
struct std::hash<gcrys::alg::Var> {
  std::size_t operator()(gcrys::alg::Var v) const noexcept { return v.hash(); }
};
