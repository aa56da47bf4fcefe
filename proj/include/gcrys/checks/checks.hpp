#pragma once

#include <string>
#include <vector>

namespace gcrys::checks {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string target;
  int n = 0;
  std::vector<Check> checks;
  double seconds = 0;

  bool ok() const;
  std::string to_json() const;
};

inline const std::vector<std::string>& targets() {
  static const std::vector<std::string> t{"braid", "axioms", "jacobians", "toda-commute", "twist-roundtrip"};
  return t;
}

// exact identity suites on GL_{n+1}; n in 1..4
Report verify_braid(int n);
Report verify_axioms(int n);
Report verify_jacobians(int n);
Report verify_toda_commute(int n);
Report verify_twist_roundtrip(int n);

// dispatch by name; std::invalid_argument for an unknown target or n outside 1..4
Report verify(const std::string& target, int n);

// fixed GL_3 and GL_4 examples, exact
Report golden_examples();

}  // namespace gcrys::checks
