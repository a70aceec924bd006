#pragma once

#include "charclass/chern.hpp"
#include "charclass/report.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charclass {

enum class Kind { Surface, Threefold };

std::string kind_name(Kind kind);

// Malformed input; the message starts with a JSON pointer or byte offset.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Which object of the document carries the values.
enum class Section { ChernData, Characters };

struct InputDocument {
  Kind kind = Kind::Surface;
  bool symbolic = false;
  // Keyed as in the document, e.g. "xi01" or "eps0"; empty when symbolic.
  std::map<std::string, Rational> values;
  nlohmann::ordered_json raw;
};

std::vector<std::string> required_keys(Kind kind, Section section);

// Strict parse: rationals must be JSON strings "p", "-p" or "p/q".
InputDocument parse_input(std::string_view text, Section section = Section::ChernData);

// Scalar for one key; symbolic documents yield the matching atom.
Scalar value_of(const InputDocument& doc, const std::string& key);

MapContext context_from(const InputDocument& doc);

// Input document for a context with numeric xi-data.
nlohmann::ordered_json chern_document(Kind kind, const MapContext& ctx);

nlohmann::ordered_json scalar_json(const Scalar& s);
nlohmann::ordered_json report_json(const ValidationReport& report);

}  // namespace charclass
