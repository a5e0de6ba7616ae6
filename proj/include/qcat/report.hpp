#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qcat {

/// One named pass/fail outcome inside a Report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or context; empty when passed
};

/// Outcome of a verification routine: an ordered list of named checks.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back(Check{std::move(name), passed, std::move(detail)});
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace qcat
