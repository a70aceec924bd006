#include "charclass/io.hpp"
#include "charclass/presets.hpp"
#include "charclass/surface.hpp"
#include "charclass/tables.hpp"
#include "charclass/threefold.hpp"
#include "charclass/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace charclass;
using nlohmann::ordered_json;

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Kind parse_kind(const std::string& text) {
  if (text == "surface") return Kind::Surface;
  if (text == "threefold") return Kind::Threefold;
  throw InputError("--kind: unknown kind '" + text + "', expected surface or threefold");
}

void print_table(const std::vector<std::pair<std::string, Scalar>>& rows) {
  std::size_t width = 0;
  for (const auto& [name, value] : rows) width = std::max(width, name.size());
  for (const auto& [name, value] : rows) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << name << value << "\n";
  }
}

void print_report(const ValidationReport& report) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    const char* tag = c.passed ? "PASS" : (c.advisory ? "NOTE" : "FAIL");
    std::cout << tag << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    if (!c.passed && !c.advisory) ++failed;
  }
  std::cout << report.checks.size() << " checks, " << failed << " failed\n";
}

int emit_characters(const InputDocument& doc, const std::vector<std::pair<std::string, Scalar>>& rows,
                    const ValidationReport& diagnostics, bool json) {
  if (json) {
    ordered_json characters = ordered_json::object();
    for (const auto& [name, value] : rows) characters[name] = scalar_json(value);
    ordered_json out{{"input", doc.raw},
                     {"kind", kind_name(doc.kind)},
                     {"characters", characters},
                     {"diagnostics", report_json(diagnostics)}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_table(rows);
    std::cout << "\n";
    print_report(diagnostics);
  }
  return diagnostics.ok() ? 0 : kExitVerification;
}

int run_characters(Kind expected, const std::string& path, bool json) {
  const InputDocument doc = parse_input(read_input(path));
  if (doc.kind != expected) {
    throw InputError("/kind: document is a " + kind_name(doc.kind) + ", command expects " + kind_name(expected));
  }
  const MapContext ctx = context_from(doc);
  if (expected == Kind::Surface) {
    const SurfaceCharacters ch = surface_characters(ctx);
    return emit_characters(doc, ch.named(), surface_diagnostics(ctx, ch), json);
  }
  const ThreefoldCharacters ch = threefold_characters(ctx);
  return emit_characters(doc, ch.named(), threefold_diagnostics(ctx, ch), json);
}

int run_invert(const std::string& kind_text, const std::string& path, bool json) {
  const Kind kind = parse_kind(kind_text);
  const InputDocument doc = parse_input(read_input(path), Section::Characters);
  if (doc.kind != kind) throw InputError("/kind: document kind does not match --kind");
  if (doc.symbolic) throw InputError("/characters: invert needs numeric characters");
  auto get = [&](const std::string& key) { return value_of(doc, key); };
  std::vector<std::pair<std::string, Scalar>> rows;
  const Scalar d = get("d");
  rows.emplace_back("d", d);
  if (kind == Kind::Surface) {
    const SurfaceXi xi = surface_invert(d, get("eps0"), get("C"), get("T"));
    rows.insert(rows.end(), {{"xi1", xi.xi1}, {"xi2", xi.xi2}, {"xi01", xi.xi01}});
  } else {
    const ThreefoldXi xi =
        threefold_invert(d, {get("mu0"), get("t"), get("gamma"), get("q"), get("s_t"), get("chi_C")});
    rows.insert(rows.end(), {{"xi1", xi.xi1}, {"xi2", xi.xi2}, {"xi01", xi.xi01}, {"xi3", xi.xi3},
                             {"xi11", xi.xi11}, {"xi001", xi.xi001}});
  }
  if (json) {
    ordered_json data = ordered_json::object();
    for (const auto& [name, value] : rows) data[name] = scalar_json(value);
    std::cout << ordered_json{{"kind", kind_name(kind)}, {"chern_data", data}, {"input", doc.raw}}.dump(2) << "\n";
  } else {
    print_table(rows);
  }
  return 0;
}

int run_verify(const std::string& suite_name, bool json) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw InputError("--suite: unknown suite '" + suite_name + "'");
  const ValidationReport report = run_suite(*suite);
  if (json) {
    std::cout << ordered_json{{"suite", suite_name}, {"passed", report.ok()}, {"diagnostics", report_json(report)}}
                     .dump(2)
              << "\n";
  } else {
    print_report(report);
  }
  return report.ok() ? 0 : kExitVerification;
}

const std::map<std::string, std::string>& surface_provenance() {
  static const std::map<std::string, std::string> p = {
      {"mu0", "degree d = f_*(1)"},
      {"C", "deg tp(A1)(f), kappa = 1"},
      {"T", "1/3 deg tp(A0^3)(f), kappa = 1"},
      {"eps0", "1/2 deg tp(A0^2)(f), kappa = 1"},
      {"kappa_cusps", "deg tp(A2)(g), g = f followed by projection to P^2, kappa = 0"},
      {"mu1", "deg tp(A1)(g), kappa = 0"},
      {"chi_Sg", "int c(TM) sm(A1)(g), kappa = 0"},
      {"mu2", "2 mu1 - chi_Sg - kappa_cusps"},
      {"rho", "int tp(A0^2)(f) tp(A1)(g) - C"},
      {"chi_D", "int c(TM) sm(alpha_im(2))(f), kappa = 1"},
      {"eps1", "2 eps0 - chi_D - 2 T"},
      {"chi_X", "int c(TM) sm(alpha_im)(f), kappa = 1"},
  };
  return p;
}

const std::map<std::string, std::string>& threefold_provenance() {
  static const std::map<std::string, std::string> p = {
      {"d", "degree d = f_*(1)"},
      {"mu0", "1/2 deg tp(A0^2)(f), kappa = 1"},
      {"t", "1/3 deg tp(A0^3)(f), kappa = 1"},
      {"gamma", "deg tp(A1)(f), kappa = 1"},
      {"q", "1/4 int tp(A0^4)(f), kappa = 1"},
      {"s_t", "int tp(A0A1)(f), kappa = 1"},
      {"chi_C", "int c(TM) sm(A1)(f), kappa = 1"},
      {"m1", "deg tp(A1)(g), g = f followed by projection to P^3, kappa = 0"},
      {"m2", "deg i_* tp(A1)(h) - deg tp(A2)(g), h: S1 -> P^2"},
      {"m3", "closed form 4d - xi001 + 2 xi01 - 3 xi1"},
      {"D_swallowtail", "int tp(A3)(g), kappa = 0"},
      {"B_plus_D", "int i_* tp(A2)(h), kappa = 0"},
      {"total_polar", "int i_* j_* tp(A1)(h'), h': S(h) -> P^1"},
      {"K_dot_S", "int -c1(TM) tp(A1)(f)"},
      {"chi_X", "int c(TM) sm(alpha_im)(f), kappa = 1"},
      {"chi_D", "int c(TM) sm(alpha_im(2))(f), kappa = 1"},
  };
  return p;
}

int run_derive(const std::string& kind_text, const std::string& character) {
  const Kind kind = parse_kind(kind_text);
  const std::vector<std::pair<std::string, Scalar>> rows =
      kind == Kind::Surface ? surface_characters(make_symbolic_context(2, 3)).named()
                            : threefold_characters(make_symbolic_context(3, 4)).named();
  const auto& provenance = kind == Kind::Surface ? surface_provenance() : threefold_provenance();
  for (const auto& [name, value] : rows) {
    if (name != character) continue;
    std::cout << name << " = " << value << "\n";
    std::cout << "from: " << provenance.at(name) << "\n";
    return 0;
  }
  std::string names;
  for (const auto& [name, value] : rows) names += (names.empty() ? "" : ", ") + name;
  throw InputError("--character: unknown character '" + character + "', expected one of " + names);
}

int run_preset(const std::string& name, const std::string& degree) {
  if (name.empty()) {
    for (const auto& n : preset_names()) std::cout << n << "\n";
    return 0;
  }
  auto parse_degree = [&]() {
    if (degree.empty()) throw InputError("--degree: required for preset " + name);
    try {
      return Rational::parse(degree);
    } catch (const std::invalid_argument&) {
      throw InputError("--degree: malformed rational '" + degree + "'");
    }
  };
  ordered_json doc;
  if (name == "roman-surface") {
    doc = chern_document(Kind::Surface, roman_surface());
  } else if (name == "veronese-p3") {
    doc = chern_document(Kind::Threefold, veronese_p3());
  } else if (name == "smooth-surface") {
    doc = chern_document(Kind::Surface, smooth_surface(parse_degree()));
  } else if (name == "smooth-threefold") {
    doc = chern_document(Kind::Threefold, smooth_threefold(parse_degree()));
  } else {
    throw InputError("preset: unknown preset '" + name + "'");
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic-class calculus for surfaces in P^3 and 3-folds in P^4"};
  app.require_subcommand(1);

  std::string input = "-";
  bool json = false;
  auto* surface = app.add_subcommand("surface", "characters of a surface from xi-data");
  surface->add_option("--input", input, "input document, - for stdin");
  surface->add_flag("--json", json, "emit a result document");
  auto* threefold = app.add_subcommand("threefold", "characters of a 3-fold from xi-data");
  threefold->add_option("--input", input, "input document, - for stdin");
  threefold->add_flag("--json", json, "emit a result document");

  std::string kind;
  auto* invert = app.add_subcommand("invert", "xi-data from characters");
  invert->add_option("--kind", kind, "surface or threefold")->required();
  invert->add_option("--input", input, "character document, - for stdin");
  invert->add_flag("--json", json, "emit a document with chern_data");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--suite", suite, "all, tables, surface or threefold");
  verify->add_flag("--json", json, "emit a result document");

  std::string character;
  auto* derive = app.add_subcommand("derive", "symbolic formula of one character");
  derive->add_option("--kind", kind, "surface or threefold")->required();
  derive->add_option("--character", character, "character name")->required();

  std::string preset_name;
  std::string degree;
  auto* preset = app.add_subcommand("preset", "list presets or print one as an input document");
  preset->add_option("name", preset_name, "preset name");
  preset->add_option("--degree", degree, "degree for smooth-surface and smooth-threefold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (surface->parsed()) return run_characters(Kind::Surface, input, json);
    if (threefold->parsed()) return run_characters(Kind::Threefold, input, json);
    if (invert->parsed()) return run_invert(kind, input, json);
    if (verify->parsed()) return run_verify(suite, json);
    if (derive->parsed()) return run_derive(kind, character);
    if (preset->parsed()) return run_preset(preset_name, degree);
  } catch (const InputError& e) {
    std::cerr << "charclass: " << e.what() << "\n";
    return kExitInput;
  } catch (const ContextError& e) {
    std::cerr << "charclass: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
