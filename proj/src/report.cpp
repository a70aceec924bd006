#include "charclass/report.hpp"

namespace charclass {

CheckResult residual_check(std::string name, const Polynomial& residual) {
  const bool zero = residual.is_zero();
  return {std::move(name), zero, zero ? "" : "residual " + residual.str()};
}

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed && !c.advisory) return false;
  }
  return true;
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

}  // namespace charclass
