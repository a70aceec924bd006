// One PASS/FAIL line per acceptance criterion; exact equality throughout.
#include "charclass/presets.hpp"
#include "charclass/surface.hpp"
#include "charclass/tables.hpp"
#include "charclass/threefold.hpp"
#include "charclass/verify.hpp"
#include "properties.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace charclass;

namespace {

// Empty string means pass.
using Criterion = std::function<std::string()>;

Polynomial P(std::string_view text) { return parse_polynomial(text); }

std::string mismatch(const std::string& what, const Polynomial& got, const Polynomial& want) {
  if (got == want) return "";
  return what + ": got " + got.str() + ", expected " + want.str();
}

std::string first_failure(std::initializer_list<std::string> results) {
  for (const auto& r : results) {
    if (!r.empty()) return r;
  }
  return "";
}

std::string failures_of(const ValidationReport& report, const std::function<bool(const CheckResult&)>& keep) {
  std::size_t seen = 0;
  for (const auto& c : report.checks) {
    if (!keep(c)) continue;
    ++seen;
    if (!c.passed && !c.advisory) return c.name + ": " + c.detail;
  }
  return seen == 0 ? "no checks selected" : "";
}

std::string veronese_reproduction() {
  const ThreefoldCharacters v = threefold_characters(veronese_p3());
  return first_failure({mismatch("mu0", v.basic.mu0, 20), mismatch("t", v.basic.t, 20),
                        mismatch("gamma", v.basic.gamma, 20), mismatch("q", v.basic.q, 5),
                        mismatch("s_t", v.basic.s_t, 40), mismatch("chi_C", v.basic.chi_C, -20),
                        mismatch("m3", v.elementary.m3, 4)});
}

std::string threefold_round_trip() {
  const MapContext f = make_symbolic_context(3, 4);
  const ThreefoldXi back = threefold_invert(P("d"), threefold_basic(f));
  return first_failure({mismatch("xi1", back.xi1, P("xi1")), mismatch("xi2", back.xi2, P("xi2")),
                        mismatch("xi01", back.xi01, P("xi01")), mismatch("xi3", back.xi3, P("xi3")),
                        mismatch("xi11", back.xi11, P("xi11")), mismatch("xi001", back.xi001, P("xi001"))});
}

std::string surface_round_trip() {
  const SurfaceCharacters ch = surface_characters(make_symbolic_context(2, 3));
  const SurfaceXi back = surface_invert(P("d"), ch.eps0, ch.C, ch.T);
  return first_failure({mismatch("xi1", back.xi1, P("xi1")), mismatch("xi2", back.xi2, P("xi2")),
                        mismatch("xi01", back.xi01, P("xi01"))});
}

std::string salmon_relations() {
  const ValidationReport r = verify_surface_relations(make_symbolic_context(2, 3));
  std::size_t count = 0;
  for (const auto& c : r.checks) count += c.name.starts_with("Salmon relation") ? 1 : 0;
  if (count != 5) return "expected 5 relations, found " + std::to_string(count);
  return failures_of(r, [](const CheckResult& c) { return c.name.starts_with("Salmon relation"); });
}

std::string omega_and_i() {
  const MapContext f = make_symbolic_context(2, 3);
  const SurfaceCharacters ch = surface_characters(f);
  const Scalar omega = ch.mu2 - 6 * ch.mu1 + 9 * ch.mu0 + ch.C + 1;
  const Scalar invariant_i = ch.mu2 - 2 * ch.mu1 + 3 * ch.mu0 - 4;
  return first_failure({mismatch("omega", omega, P("xi2 + 1")), mismatch("I", invariant_i, P("xi01 - 4")),
                        mismatch("omega + I", omega + invariant_i, P("xi2 + xi01 - 3"))});
}

std::string roman_surface_values() {
  const SurfaceCharacters r = surface_characters(roman_surface());
  const SurfaceXi back = surface_invert(4, r.eps0, r.C, r.T);
  return first_failure({mismatch("eps0", r.eps0, 3), mismatch("C", r.C, 6), mismatch("T", r.T, 1),
                        mismatch("mu1", r.mu1, 6), mismatch("mu2", r.mu2, 3),
                        mismatch("kappa_cusps", r.kappa_cusps, 9), mismatch("rho", r.rho, 3),
                        mismatch("eps1", r.eps1, 0), mismatch("chi_D", r.chi_D, 4),
                        mismatch("xi1 round trip", back.xi1, 6), mismatch("xi2 round trip", back.xi2, 9),
                        mismatch("xi01 round trip", back.xi01, 3)});
}

std::string smooth_degenerations() {
  const Polynomial d = P("d");
  const SurfaceCharacters s = surface_characters(smooth_surface(d));
  const ThreefoldCharacters t = threefold_characters(smooth_threefold(d));
  return first_failure({mismatch("surface eps0", s.eps0, 0), mismatch("surface C", s.C, 0),
                        mismatch("surface T", s.T, 0), mismatch("surface mu1", s.mu1, d * (d - 1)),
                        mismatch("surface kappa_cusps", s.kappa_cusps, d * (d - 1) * (d - 2)),
                        mismatch("surface mu2", s.mu2, d * (d - 1).pow(2)),
                        mismatch("3-fold mu0", t.basic.mu0, 0), mismatch("3-fold t", t.basic.t, 0),
                        mismatch("3-fold gamma", t.basic.gamma, 0), mismatch("3-fold q", t.basic.q, 0),
                        mismatch("3-fold s_t", t.basic.s_t, 0), mismatch("3-fold chi_C", t.basic.chi_C, 0),
                        mismatch("3-fold m1", t.elementary.m1, d * (d - 1)),
                        mismatch("3-fold m2", t.elementary.m2, d * (d - 1).pow(2)),
                        mismatch("3-fold m3", t.elementary.m3, d * (d - 1).pow(3))});
}

std::string canonical_dot_critical_identity() {
  const MapContext f = make_symbolic_context(3, 4);
  const Scalar ks = canonical_dot_critical(f);
  const ThreefoldBasic b = threefold_basic(f);
  const Polynomial d = P("d");
  return first_failure({mismatch("xi form", ks, P("-10*xi1 + xi11 + 5*xi2 - xi3")),
                        mismatch("character form", ks, Rational(1, 2) * b.s_t - Rational(1, 2) * d * b.gamma - b.chi_C),
                        mismatch("Veronese", canonical_dot_critical(veronese_p3()), -40)});
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string table_validation() {
  if (auto f = failures_of(validate_tables(), [](const CheckResult&) { return true; }); !f.empty()) return f;
  std::ifstream in(CHARCLASS_TEST_DATA_DIR "/golden/tables_printed_order.txt");
  if (!in) return "golden file missing";
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string name, kappa, poly;
    std::getline(fields, name, '|');
    std::getline(fields, kappa, '|');
    std::getline(fields, poly);
    name = trim(name);
    const int k = std::stoi(trim(kappa));
    const TableEntry* stored = nullptr;
    for (const auto& e : universal_table()) {
      if (e.cls.name == name && e.cls.kappa == k) stored = &e;
    }
    if (!stored) return "golden row " + name + " has no stored entry";
    if (parse_polynomial(trim(poly), k) != stored->cls.body) return "golden row " + name + " differs from the data file";
    if (stored->cls.body.str() != stored->rendered) return "entry " + name + " is not in canonical rendering";
    ++rows;
  }
  if (rows != universal_table().size()) return "golden file has " + std::to_string(rows) + " rows";
  return "";
}

std::string euler_lines() {
  const MapContext f = make_symbolic_context(2, 3);
  return first_failure(
      {mismatch("chi(S(g))", weighted_euler(project_context(f), ssm_series("A1", 0)), P("-9*d + 9*xi1 - 2*xi2")),
       mismatch("chi(D)", weighted_euler(f, ssm_series("alpha_im(2)", 1)),
                P("1/3*(7*d + 6*d^2 - d^3 - 5/2*xi01 - 12*xi1 + 7/2*xi2)"))});
}

std::string misprint_diagnostics() {
  const ValidationReport report = run_suite(Suite::All);
  std::size_t misprints = 0;
  for (const auto& c : report.checks) misprints += c.name.starts_with("misprinted ") && c.passed ? 1 : 0;
  if (misprints != known_misprints().size()) {
    return std::to_string(misprints) + " of " + std::to_string(known_misprints().size()) + " misprints confirmed";
  }
  for (const char* closed : {"rho closed form", "m2 closed form", "s01(f) coefficient equals crosscap count"}) {
    if (auto f = failures_of(report, [&](const CheckResult& c) { return c.name == closed; }); !f.empty()) return f;
  }
  return failures_of(report, [](const CheckResult&) { return true; });
}

std::string property_suite() {
  return first_failure({properties::projection_formula(), properties::ring_laws(), properties::series_inversion(),
                        properties::substitution_homomorphism()});
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"Veronese 3-fold characters are exact", veronese_reproduction},
      {"3-fold xi -> characters -> xi is the identity in seven atoms", threefold_round_trip},
      {"surface xi -> (eps0, C, T) -> xi is the identity", surface_round_trip},
      {"five Salmon relations vanish identically", salmon_relations},
      {"omega = xi2 + 1, I = xi01 - 4, omega + I = xi2 + xi01 - 3", omega_and_i},
      {"Steiner Roman surface characters", roman_surface_values},
      {"smooth hypersurfaces of symbolic degree", smooth_degenerations},
      {"K.S: xi form, character form, Veronese value -40", canonical_dot_critical_identity},
      {"universal tables: homogeneity, leading terms, golden transcription", table_validation},
      {"chi(S(g)) and chi(D) via weighted Euler characteristics", euler_lines},
      {"misprinted lines differ exactly as recorded, nothing else diverges", misprint_diagnostics},
      {"randomized algebra identities, 1000 cases each", property_suite},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (detail.empty() ? "PASS" : "FAIL") << "  [" << n << "] " << name;
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    failed += detail.empty() ? 0 : 1;
  }
  std::cout << (n - failed) << "/" << n << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
