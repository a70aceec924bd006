#include "charclass/tables.hpp"

#include "charclass/polynomial.hpp"

#include <charconv>
#include <sstream>

namespace charclass {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view field, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("table line " + std::to_string(line_no) + ": bad integer '" +
                                std::string(field) + "'");
  }
  return value;
}

// Lowest-weight part of each series: factor * tp(name), or factor alone when name is empty.
struct LeadingTerm {
  std::string_view series;
  int kappa;
  std::string_view thom;
  Rational factor;
};

const std::vector<LeadingTerm>& leading_terms() {
  static const std::vector<LeadingTerm> table = {
      {"A1", 0, "A1", Rational(1)},
      {"A1", 1, "A1", Rational(1)},
      {"A0^2", 1, "A0^2", Rational(1)},
      {"alpha_im", 1, "", Rational(1)},
      {"alpha_im(2)", 1, "A0^2", Rational(1, 2)},
  };
  return table;
}

const AbstractClass& lookup(std::string_view full_name, int kappa) {
  for (const auto& entry : universal_table()) {
    if (entry.cls.name == full_name && entry.cls.kappa == kappa) return entry.cls;
  }
  throw TableMiss("no universal class " + std::string(full_name) + " at kappa " + std::to_string(kappa));
}

}  // namespace

std::vector<TableEntry> parse_universal_table(std::string_view text) {
  std::vector<TableEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t bar; (bar = line.find('|', start)) != std::string_view::npos; start = bar + 1) {
      fields.push_back(trim(line.substr(start, bar - start)));
    }
    fields.push_back(trim(line.substr(start)));
    if (fields.size() != 5) {
      throw std::invalid_argument("table line " + std::to_string(line_no) + ": expected 5 fields");
    }
    TableEntry entry;
    entry.cls.name = std::string(fields[0]);
    entry.cls.kappa = parse_int(fields[1], line_no);
    entry.codim = parse_int(fields[2], line_no);
    entry.rendered = std::string(fields[3]);
    entry.cls.body = parse_polynomial(fields[3], entry.cls.kappa);
    if (fields[4] != "-") entry.cls.valid_to_weight = parse_int(fields[4], line_no);
    if (entry.is_series() == entry.cls.exact()) {
      throw std::invalid_argument("table line " + std::to_string(line_no) +
                                  ": series need a validity weight, Thom polynomials must not have one");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

const std::vector<TableEntry>& universal_table() {
  static const std::vector<TableEntry> table = parse_universal_table(universal_table_source());
  return table;
}

const AbstractClass& thom_polynomial(std::string_view name, int kappa) {
  if (name.starts_with("sm:")) throw TableMiss("thom_polynomial given a series name");
  return lookup(name, kappa);
}

const AbstractClass& ssm_series(std::string_view name, int kappa) {
  return lookup("sm:" + std::string(name), kappa);
}

ValidationReport validate_tables() {
  ValidationReport report;
  for (const auto& entry : universal_table()) {
    const std::string label = entry.cls.name + "@" + std::to_string(entry.cls.kappa);
    const std::string rendered = entry.cls.body.str();
    report.add({"canonical rendering " + label, rendered == entry.rendered,
                rendered == entry.rendered ? "" : "renders as " + rendered});
    if (!entry.is_series()) {
      const bool homogeneous = entry.cls.body.is_homogeneous(entry.codim);
      report.add({"homogeneous " + label, homogeneous,
                               homogeneous ? "" : "not of weight " + std::to_string(entry.codim)});
      continue;
    }
    const std::string series = entry.cls.name.substr(3);
    const LeadingTerm* lead = nullptr;
    for (const auto& l : leading_terms()) {
      if (l.series == series && l.kappa == entry.cls.kappa) lead = &l;
    }
    if (lead == nullptr) {
      report.add({"leading term " + label, false, "no leading Thom polynomial recorded"});
      continue;
    }
    Polynomial expected = Polynomial(lead->factor).with_kappa(entry.cls.kappa);
    if (!lead->thom.empty()) expected *= thom_polynomial(lead->thom, entry.cls.kappa).body;
    const int w = entry.cls.body.min_weight().value_or(0);
    const Polynomial leading = component_of_weight(entry.cls.body, w);
    const bool same = leading == expected && w == entry.codim;
    report.add(
        {"leading term " + label, same, same ? "" : "lowest part " + leading.str() + " vs " + expected.str()});
    const bool within = entry.cls.body.max_weight().value_or(0) <= *entry.cls.valid_to_weight;
    report.add({"validity weight " + label, within,
                             within ? "" : "terms beyond the recorded validity weight"});
  }
  return report;
}

}  // namespace charclass
