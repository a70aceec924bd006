#pragma once

#include "charclass/polynomial.hpp"

#include <string>
#include <vector>

namespace charclass {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  // Advisory checks are reported but never fail a report.
  bool advisory = false;
};

// Passes when residual is the zero polynomial; the residual is kept as detail.
CheckResult residual_check(std::string name, const Polynomial& residual);

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const ValidationReport& other);
};

}  // namespace charclass
