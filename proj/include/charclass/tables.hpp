#pragma once

#include "charclass/abstract_class.hpp"
#include "charclass/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charclass {

class TableMiss : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// One line of the universal-class data file:
// name | kappa | codim | polynomial | valid_to_weight ("-" when exact).
// Thom polynomials use the plain type name, SSM series the prefix "sm:".
struct TableEntry {
  AbstractClass cls;
  int codim = 0;
  std::string rendered;  // polynomial column exactly as stored
  bool is_series() const { return cls.name.starts_with("sm:"); }
};

// Raw text of the embedded data file.
std::string_view universal_table_source();

// Parses data-file text; throws ParseError or std::invalid_argument on malformed lines.
std::vector<TableEntry> parse_universal_table(std::string_view text);

// Parsed embedded table, loaded once.
const std::vector<TableEntry>& universal_table();

// name without the "sm:" prefix, e.g. thom_polynomial("A0^3", 1), ssm_series("alpha_im(2)", 1).
const AbstractClass& thom_polynomial(std::string_view name, int kappa);
const AbstractClass& ssm_series(std::string_view name, int kappa);

// Homogeneity of every Thom polynomial in its codimension and agreement of each
// SSM series' lowest-weight part with its leading Thom polynomial.
ValidationReport validate_tables();

}  // namespace charclass
