#pragma once

#include "charclass/polynomial.hpp"

#include <optional>
#include <string>

namespace charclass {

// Universal class: a polynomial in quotient Chern classes c_k and
// Landweber-Novikov classes s_I, tied to one relative codimension kappa.
// valid_to_weight is empty for exact (Thom) polynomials and records the last
// printed weight for truncated SSM series.
struct AbstractClass {
  std::string name;
  int kappa = 0;
  Polynomial body;
  std::optional<int> valid_to_weight;

  bool exact() const { return !valid_to_weight.has_value(); }
};

}  // namespace charclass
