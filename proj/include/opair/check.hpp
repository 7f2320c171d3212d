#ifndef OPAIR_CHECK_HPP
#define OPAIR_CHECK_HPP

#include <deque>
#include <string>

namespace opair {

/// One verified identity: pass/fail plus enough context to show a
/// counterexample when something breaks.
struct Check {
  std::string name;
  bool pass = true;
  int samples = 0;
  int failures = 0;
  std::string detail;  // first counterexample, detected constants, etc.
};

struct Report {
  // deque: callers hold references to added checks across later add() calls
  std::deque<Check> checks;

  Check& add(const std::string& name) {
    checks.emplace_back();
    checks.back().name = name;
    return checks.back();
  }
  void fold(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace opair

#endif
