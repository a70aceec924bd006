#include "charclass/verify.hpp"

#include "charclass/presets.hpp"
#include "charclass/surface.hpp"
#include "charclass/tables.hpp"
#include "charclass/threefold.hpp"

#include <map>

namespace charclass {

namespace {

Polynomial reference(std::string_view text) { return parse_polynomial(text); }

CheckResult equals(std::string name, const Polynomial& engine, const Polynomial& expected) {
  return residual_check(std::move(name), engine - expected);
}

CheckResult misprint_check(const std::string& character, const Polynomial& engine) {
  for (const auto& m : known_misprints()) {
    if (m.character != character) continue;
    const Polynomial difference = engine - reference(m.printed);
    const Polynomial expected = reference(m.engine_minus_printed);
    const bool ok = difference == expected;
    return {"misprinted " + character + " line differs by " + expected.str(), ok,
            ok ? "" : "engine - printed = " + difference.str()};
  }
  return {"misprinted " + character + " line", false, "no misprint recorded"};
}

CheckResult integral_check(const std::string& name, const Scalar& value) {
  const bool ok = value.is_constant() && value.to_rational().is_integer();
  return {name + " is an integer", ok, ok ? "" : "value " + value.str()};
}

Polynomial atom(std::string_view name) { return reference(name); }

// Reference xi-lines of the surface characters.
const std::map<std::string, std::string>& surface_lines() {
  static const std::map<std::string, std::string> lines = {
      {"C", "6*d - 4*xi1 + xi2 - xi01"},
      {"T", "1/6*(44*d - 12*d^2 + d^3 + (3*d - 24)*xi1 + 4*xi2 - 2*xi01)"},
      {"eps0", "1/2*(d^2 - 4*d + xi1)"},
      {"kappa_cusps", "12*d - 9*xi1 + 2*xi2 - xi01"},
      {"mu1", "3*d - xi1"},
      {"chi_Sg", "-9*d + 9*xi1 - 2*xi2"},
      {"mu2", "3*d - 2*xi1 + xi01"},
      {"chi_D", "1/3*(7*d + 6*d^2 - d^3 - 5/2*xi01 - 12*xi1 + 7/2*xi2)"},
      {"eps1", "3*d^2 - 21*d + (13 - d)*xi1 + 3/2*xi01 - 5/2*xi2"},
  };
  return lines;
}

const std::map<std::string, std::string>& threefold_lines() {
  static const std::map<std::string, std::string> lines = {
      {"mu0", "1/2*(-5*d + d^2 + xi1)"},
      {"t", "1/3*(35*d - 15/2*d^2 + 1/2*d^3 - xi01 - 15*xi1 + 3/2*d*xi1 + 2*xi2)"},
      {"gamma", "10*d - xi01 - 5*xi1 + xi2"},
      {"q",
       "1/4*(-295*d + 355/6*d^2 - 5*d^3 + 1/6*d^4 + 2*xi001 + (25 - 4/3*d)*xi01 + (200 - 25*d + d^2)*xi1"
       " + 1/2*xi1^2 - 7*xi11 + (-55 + 8/3*d)*xi2 + 6*xi3)"},
      {"s_t", "-120*d + 10*d^2 + 2*xi001 + (20 - d)*xi01 + (90 - 5*d)*xi1 - 6*xi11 + (d - 30)*xi2 + 4*xi3"},
      {"chi_C", "-60*d + xi001 + 10*xi01 + 55*xi1 - 4*xi11 - 20*xi2 + 3*xi3"},
      {"m1", "4*d - xi1"},
      {"m3", "4*d - xi001 + 2*xi01 - 3*xi1"},
      {"K_dot_S", "-10*xi1 + xi11 + 5*xi2 - xi3"},
  };
  return lines;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "tables") return Suite::Tables;
  if (name == "surface") return Suite::Surface;
  if (name == "threefold") return Suite::Threefold;
  return std::nullopt;
}

const std::vector<KnownMisprint>& known_misprints() {
  static const std::vector<KnownMisprint> table = {
      // xi2 and xi01 swapped.
      {"rho", "-18*d + 3*d^2 + (11 - d)*xi1 - 2*xi01 + xi2", "3*xi01 - 3*xi2"},
      // Sign of xi01.
      {"m2", "6*d - 3*xi1 - xi01", "2*xi01"},
      // Coefficient of a^3 in s01(f) of a surface; leading d printed as a.
      {"s01", "6*a - 4*xi1 + xi2 - xi01", "6*d - 6*a"},
  };
  return table;
}

ValidationReport verify_tables() {
  ValidationReport report = validate_tables();
  report.add({"universal table has 18 entries", universal_table().size() == 18,
              "found " + std::to_string(universal_table().size())});
  return report;
}

ValidationReport verify_surface() {
  ValidationReport report;
  const MapContext f = make_symbolic_context(2, 3);
  const SurfaceCharacters ch = surface_characters(f);
  const Polynomial d = atom("d");

  // Quotient and Landweber-Novikov classes.
  const auto cf = quotient_chern(f);
  report.add(equals("c1(f) = 4at - c1(TM)", cf[0].poly(), reference("4*at - c1(TM)")));
  report.add(equals("c2(f) = 6at^2 - 4at c1(TM) + c1(TM)^2 - c2(TM)", cf[1].poly(),
                    reference("6*at^2 - 4*at*c1(TM) + c1(TM)^2 - c2(TM)")));
  report.add(equals("s0(f) = d a", landweber_novikov(f, {}).poly(), reference("d*a")));
  report.add(equals("s1(f) coefficient", coefficient_of_power(landweber_novikov(f, {1}), 2), reference("4*d - xi1")));
  report.add(equals("s2(f) coefficient", coefficient_of_power(landweber_novikov(f, {2}), 3),
                    reference("16*d - 8*xi1 + xi2")));
  const Scalar s01 = coefficient_of_power(landweber_novikov(f, {0, 1}), 3);
  report.add(misprint_check("s01", s01));
  report.add(equals("s01(f) coefficient equals crosscap count", s01, ch.C));

  // xi-lines.
  std::map<std::string, Scalar> values;
  for (const auto& [name, value] : ch.named()) values[name] = value;
  for (const auto& [name, line] : surface_lines()) {
    report.add(equals(name + " xi-line", values.at(name), reference(line)));
  }
  report.add(misprint_check("rho", ch.rho));

  // Closed forms in (d, eps0, C, T).
  const Scalar& e0 = ch.eps0;
  const Scalar& C = ch.C;
  const Scalar& T = ch.T;
  report.add(equals("kappa closed form", ch.kappa_cusps, d * (d - 1) * (d - 2) + (6 - 3 * d) * e0 + 3 * T));
  report.add(equals("mu1 closed form", ch.mu1, d * (d - 1) - 2 * e0));
  report.add(equals("mu2 closed form", ch.mu2, d * (d - 1).pow(2) + (4 - 3 * d) * e0 + 3 * T - 2 * C));
  report.add(equals("rho closed form", ch.rho, (d - 2) * e0 - 3 * T));
  report.add(equals("chi(D) closed form", ch.chi_D, (4 - d) * e0 + T + Rational(1, 2) * C));
  report.add(equals("eps1 closed form", ch.eps1, (d - 2) * e0 - 3 * T - Rational(1, 2) * C));
  report.add(equals("mu2 + kappa = 2 mu1 - chi(S(g))", ch.mu2 + ch.kappa_cusps, 2 * ch.mu1 - ch.chi_Sg));

  // Round trip through (d, eps0, C, T).
  const SurfaceXi back = surface_invert(d, e0, C, T);
  report.add(equals("xi1 from (d, eps0, C, T)", back.xi1, atom("xi1")));
  report.add(equals("xi2 from (d, eps0, C, T)", back.xi2, atom("xi2")));
  report.add(equals("xi01 from (d, eps0, C, T)", back.xi01, atom("xi01")));

  report.append(verify_surface_relations(ch, f.xi({2}), f.xi({0, 1})));

  // Roman surface.
  const SurfaceCharacters roman = surface_characters(roman_surface());
  const std::vector<std::pair<std::string, std::pair<const Scalar*, int>>> expected_roman = {
      {"eps0", {&roman.eps0, 3}},       {"C", {&roman.C, 6}},     {"T", {&roman.T, 1}},
      {"mu1", {&roman.mu1, 6}},         {"mu2", {&roman.mu2, 3}}, {"kappa_cusps", {&roman.kappa_cusps, 9}},
      {"rho", {&roman.rho, 3}},         {"eps1", {&roman.eps1, 0}}, {"chi_D", {&roman.chi_D, 4}},
  };
  for (const auto& [name, pair] : expected_roman) {
    report.add(equals("Roman surface " + name + " = " + std::to_string(pair.second), *pair.first, pair.second));
  }
  const SurfaceXi roman_xi = surface_invert(4, roman.eps0, roman.C, roman.T);
  report.add(equals("Roman surface xi1 round trip", roman_xi.xi1, 6));
  report.add(equals("Roman surface xi2 round trip", roman_xi.xi2, 9));
  report.add(equals("Roman surface xi01 round trip", roman_xi.xi01, 3));
  report.append(verify_surface_relations(roman, 9, 3));

  // Smooth surfaces of symbolic degree.
  const SurfaceCharacters smooth = surface_characters(smooth_surface(d));
  report.add(equals("smooth surface eps0 = 0", smooth.eps0, 0));
  report.add(equals("smooth surface C = 0", smooth.C, 0));
  report.add(equals("smooth surface T = 0", smooth.T, 0));
  report.add(equals("smooth surface mu1 = d(d-1)", smooth.mu1, d * (d - 1)));
  report.add(equals("smooth surface kappa = d(d-1)(d-2)", smooth.kappa_cusps, d * (d - 1) * (d - 2)));
  report.add(equals("smooth surface mu2 = d(d-1)^2", smooth.mu2, d * (d - 1).pow(2)));

  for (const auto& [label, chars] : {std::pair{"Roman surface", roman},
                                     std::pair{"quintic surface", surface_characters(smooth_surface(5))}}) {
    for (const auto& [name, value] : chars.named()) {
      if (name == "chi_Sg" || name == "chi_D" || name == "chi_X") continue;
      report.add(integral_check(std::string(label) + " " + name, value));
    }
  }
  return report;
}

ValidationReport verify_threefold() {
  ValidationReport report;
  const MapContext f = make_symbolic_context(3, 4);
  const ThreefoldCharacters ch = threefold_characters(f);
  const Polynomial d = atom("d");
  const ThreefoldBasic& b = ch.basic;

  std::map<std::string, Scalar> values;
  for (const auto& [name, value] : ch.named()) values[name] = value;
  for (const auto& [name, line] : threefold_lines()) {
    report.add(equals(name + " xi-line", values.at(name), reference(line)));
  }
  report.add(misprint_check("m2", ch.elementary.m2));
  report.add(equals("stationary points agree for both orders", stationary_points_alt(f), b.s_t));
  report.add(equals("c1(f) = 5at - c1(TM)", quotient_chern(f)[0].poly(), reference("5*at - c1(TM)")));

  const ThreefoldXi back = threefold_invert(d, b);
  report.add(equals("xi1 from characters", back.xi1, atom("xi1")));
  report.add(equals("xi2 from characters", back.xi2, atom("xi2")));
  report.add(equals("xi01 from characters", back.xi01, atom("xi01")));
  report.add(equals("xi3 from characters", back.xi3, atom("xi3")));
  report.add(equals("xi11 from characters", back.xi11, atom("xi11")));
  report.add(equals("xi001 from characters", back.xi001, atom("xi001")));

  report.add(equals("m1 = d(d-1) - 2 mu0", ch.elementary.m1, d * (d - 1) - 2 * b.mu0));
  report.add(equals("m2 closed form", ch.elementary.m2, d * (d - 1).pow(2) + (4 - 3 * d) * b.mu0 + 3 * b.t - 2 * b.gamma));
  report.add(equals("m3 closed form", ch.elementary.m3,
                    d * (d - 1).pow(3) + (-6 + 9 * d - 4 * d * d + 2 * b.mu0) * b.mu0 - 4 * b.q -
                        Rational(3, 2) * b.s_t + (4 * d - 9) * b.t + (Rational(3, 2) * d - 14) * b.gamma +
                        4 * b.chi_C));
  report.add(equals("K.S = s_t/2 - d gamma/2 - chi_C", ch.K_dot_S,
                    Rational(1, 2) * b.s_t - Rational(1, 2) * d * b.gamma - b.chi_C));

  const DoubleLocus locus = double_locus_calculus(f);
  report.add(equals("phi_*(1) = (d - 5)at + c1(TM)", locus.push_one.poly(), reference("(d - 5)*at + c1(TM)")));
  const auto [two, three] = double_locus_consistency(f, locus);
  report.add(residual_check("phi_* tp(A0^2)(phi) = 2 tp(A0^3)(f)", two.poly()));
  report.add(residual_check("phi_* tp(A0^3)(phi) / 3 = tp(A0^4)(f)", three.poly()));

  // Quadratic Veronese 3-fold.
  const MapContext vctx = veronese_p3();
  const ThreefoldCharacters v = threefold_characters(vctx);
  const std::vector<std::pair<std::string, std::pair<const Scalar*, int>>> expected_veronese = {
      {"mu0", {&v.basic.mu0, 20}},    {"t", {&v.basic.t, 20}},       {"gamma", {&v.basic.gamma, 20}},
      {"q", {&v.basic.q, 5}},         {"s_t", {&v.basic.s_t, 40}},   {"chi_C", {&v.basic.chi_C, -20}},
      {"m1", {&v.elementary.m1, 16}}, {"m2", {&v.elementary.m2, 12}}, {"m3", {&v.elementary.m3, 4}},
      {"K_dot_S", {&v.K_dot_S, -40}},
  };
  for (const auto& [name, pair] : expected_veronese) {
    report.add(equals("Veronese " + name + " = " + std::to_string(pair.second), *pair.first, pair.second));
  }
  const ThreefoldXi vback = threefold_invert(8, v.basic);
  report.add(equals("Veronese xi round trip",
                    vback.xi1 + 10 * vback.xi2 + 100 * vback.xi01 + 1000 * vback.xi3 + 10000 * vback.xi11 +
                        100000 * vback.xi001,
                    16 + 10 * 32 + 100 * 12 + 1000 * 64 + 10000 * 24 + 100000 * 4));
  report.add(equals("Veronese degree of phi_*(1) = 2 mu0", double_locus_calculus(vctx).deg_one, 40));

  // Smooth hypersurfaces of symbolic degree.
  const MapContext sctx = smooth_threefold(d);
  const ThreefoldCharacters s = threefold_characters(sctx);
  for (const auto& [name, value] : std::vector<std::pair<std::string, Scalar>>{
           {"mu0", s.basic.mu0}, {"t", s.basic.t}, {"gamma", s.basic.gamma},
           {"q", s.basic.q}, {"s_t", s.basic.s_t}, {"chi_C", s.basic.chi_C}, {"K_dot_S", s.K_dot_S}}) {
    report.add(equals("smooth 3-fold " + name + " = 0", value, 0));
  }
  report.add(equals("smooth 3-fold m1 = d(d-1)", s.elementary.m1, d * (d - 1)));
  report.add(equals("smooth 3-fold m2 = d(d-1)^2", s.elementary.m2, d * (d - 1).pow(2)));
  report.add(equals("smooth 3-fold m3 = d(d-1)^3", s.elementary.m3, d * (d - 1).pow(3)));
  const DoubleLocus empty = double_locus_calculus(sctx);
  for (const auto& [name, cls] : std::vector<std::pair<std::string, SourceClass>>{
           {"phi_*(1)", empty.push_one}, {"phi_*(c1)", empty.push_c1},
           {"phi_*(c1^2)", empty.push_c1sq}, {"phi_*(c2)", empty.push_c2}}) {
    const bool zero = numerically_zero(sctx, cls);
    report.add({"smooth 3-fold " + name + " is numerically zero", zero, zero ? "" : cls.str()});
  }

  for (const auto& [name, value] : v.named()) {
    if (name == "chi_X" || name == "chi_D") continue;
    report.add(integral_check("Veronese " + name, value));
  }
  const Scalar half_chi = Rational(1, 2) * v.basic.chi_C;
  report.add(integral_check("Veronese chi_C / 2", half_chi));
  return report;
}

ValidationReport surface_diagnostics(const MapContext& f, const SurfaceCharacters& ch) {
  ValidationReport report = verify_surface_relations(ch, f.xi({2}), f.xi({0, 1}));
  report.add(equals("mu2 + kappa = 2 mu1 - chi(S(g))", ch.mu2 + ch.kappa_cusps, 2 * ch.mu1 - ch.chi_Sg));
  const SurfaceXi back = surface_invert(ch.mu0, ch.eps0, ch.C, ch.T);
  report.add(equals("xi1 from (d, eps0, C, T)", back.xi1, f.xi({1})));
  report.add(equals("xi2 from (d, eps0, C, T)", back.xi2, f.xi({2})));
  report.add(equals("xi01 from (d, eps0, C, T)", back.xi01, f.xi({0, 1})));
  if (f.xi({}).is_constant()) {
    for (const auto& [name, value] : ch.named()) {
      if (name == "chi_Sg" || name == "chi_D" || name == "chi_X") continue;
      CheckResult c = integral_check(name, value);
      c.advisory = true;
      report.add(std::move(c));
    }
  }
  return report;
}

ValidationReport threefold_diagnostics(const MapContext& f, const ThreefoldCharacters& ch) {
  ValidationReport report;
  const ThreefoldBasic& b = ch.basic;
  const Scalar& d = ch.d;
  const ThreefoldXi back = threefold_invert(d, b);
  report.add(equals("xi1 from characters", back.xi1, f.xi({1})));
  report.add(equals("xi2 from characters", back.xi2, f.xi({2})));
  report.add(equals("xi01 from characters", back.xi01, f.xi({0, 1})));
  report.add(equals("xi3 from characters", back.xi3, f.xi({3})));
  report.add(equals("xi11 from characters", back.xi11, f.xi({1, 1})));
  report.add(equals("xi001 from characters", back.xi001, f.xi({0, 0, 1})));
  report.add(equals("m1 = d(d-1) - 2 mu0", ch.elementary.m1, d * (d - 1) - 2 * b.mu0));
  report.add(equals("K.S = s_t/2 - d gamma/2 - chi_C", ch.K_dot_S,
                    Rational(1, 2) * b.s_t - Rational(1, 2) * d * b.gamma - b.chi_C));
  report.add(equals("stationary points agree for both orders", stationary_points_alt(f), b.s_t));
  if (d.is_constant()) {
    for (const auto& [name, value] : ch.named()) {
      if (name == "chi_X" || name == "chi_D") continue;
      CheckResult c = integral_check(name, value);
      c.advisory = true;
      report.add(std::move(c));
    }
    CheckResult parity = integral_check("chi_C / 2", Rational(1, 2) * b.chi_C);
    parity.advisory = true;
    report.add(std::move(parity));
  }
  return report;
}

ValidationReport run_suite(Suite suite) {
  ValidationReport report;
  if (suite == Suite::Tables || suite == Suite::All) report.append(verify_tables());
  if (suite == Suite::Surface || suite == Suite::All) report.append(verify_surface());
  if (suite == Suite::Threefold || suite == Suite::All) report.append(verify_threefold());
  return report;
}

}  // namespace charclass
