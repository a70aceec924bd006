#include "charclass/io.hpp"

#include <algorithm>

namespace charclass {

namespace {

using nlohmann::ordered_json;

MultiIndex index_for_key(const std::string& key) {
  if (key == "d") return {};
  return MultiIndex::parse(std::string_view(key).substr(2));
}

}  // namespace

std::string kind_name(Kind kind) { return kind == Kind::Surface ? "surface" : "threefold"; }

std::vector<std::string> required_keys(Kind kind, Section section) {
  if (section == Section::ChernData) {
    if (kind == Kind::Surface) return {"d", "xi1", "xi2", "xi01"};
    return {"d", "xi1", "xi2", "xi01", "xi3", "xi11", "xi001"};
  }
  if (kind == Kind::Surface) return {"d", "eps0", "C", "T"};
  return {"d", "mu0", "t", "q", "s_t", "gamma", "chi_C"};
}

InputDocument parse_input(std::string_view text, Section section) {
  InputDocument doc;
  try {
    doc.raw = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  if (!doc.raw.is_object()) throw InputError("/: expected a JSON object");
  if (!doc.raw.contains("kind")) throw InputError("/kind: missing");
  const auto& kind = doc.raw["kind"];
  if (kind == "surface") {
    doc.kind = Kind::Surface;
  } else if (kind == "threefold") {
    doc.kind = Kind::Threefold;
  } else {
    throw InputError("/kind: unknown kind " + kind.dump() + ", expected \"surface\" or \"threefold\"");
  }

  const std::string field = section == Section::ChernData ? "chern_data" : "characters";
  const std::string where = "/" + field;
  if (!doc.raw.contains(field)) throw InputError(where + ": missing");
  const auto& data = doc.raw[field];
  if (data.is_string() && data == "symbolic") {
    doc.symbolic = true;
    return doc;
  }
  if (!data.is_object()) throw InputError(where + ": expected an object or \"symbolic\"");

  const auto keys = required_keys(doc.kind, section);
  std::vector<std::string> missing;
  for (const auto& key : keys) {
    if (!data.contains(key)) missing.push_back(key);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& key : missing) list += (list.empty() ? "" : ", ") + key;
    throw InputError(where + ": missing keys " + list);
  }
  for (const auto& [key, value] : data.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw InputError(where + "/" + key + ": unexpected key for kind " + kind_name(doc.kind));
    }
    if (!value.is_string()) throw InputError(where + "/" + key + ": rationals must be JSON strings");
    try {
      doc.values.emplace(key, Rational::parse(value.get<std::string>()));
    } catch (const std::invalid_argument&) {
      throw InputError(where + "/" + key + ": malformed rational " + value.dump());
    }
  }
  return doc;
}

Scalar value_of(const InputDocument& doc, const std::string& key) {
  if (!doc.symbolic) return Polynomial(doc.values.at(key));
  if (key == "d" || key.starts_with("xi")) return Polynomial(VariableId::xi(index_for_key(key)));
  throw InputError("symbolic values exist only for xi-data");
}

MapContext context_from(const InputDocument& doc) {
  const int m = doc.kind == Kind::Surface ? 2 : 3;
  if (doc.symbolic) return make_symbolic_context(m, m + 1);
  std::map<MultiIndex, Scalar> xi;
  for (const auto& key : required_keys(doc.kind, Section::ChernData)) {
    xi.emplace(index_for_key(key), value_of(doc, key));
  }
  return make_context(m, m + 1, std::move(xi));
}

ordered_json chern_document(Kind kind, const MapContext& ctx) {
  ordered_json data = ordered_json::object();
  for (const auto& key : required_keys(kind, Section::ChernData)) {
    data[key] = ctx.xi(index_for_key(key)).str();
  }
  return {{"kind", kind_name(kind)}, {"chern_data", data}};
}

ordered_json scalar_json(const Scalar& s) { return s.str(); }

ordered_json report_json(const ValidationReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& c : report.checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"advisory", c.advisory}, {"detail", c.detail}});
  }
  return out;
}

}  // namespace charclass
