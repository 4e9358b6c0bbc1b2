#pragma once

#include <string>
#include <vector>

namespace simpsep {

/// Outcome of an exhaustive or sampled property check.
struct CheckReport {
  long long cases = 0;
  std::vector<std::string> violations;  // first few offending instances

  bool ok() const { return violations.empty(); }
  void violation(std::string what) {
    if (violations.size() < 16) violations.push_back(std::move(what));
    else if (violations.size() == 16) violations.push_back("... (more suppressed)");
  }
  void merge(const CheckReport& other) {
    cases += other.cases;
    for (const auto& v : other.violations) violation(v);
  }
};

}  // namespace simpsep
