#include "charclass/threefold.hpp"

#include "charclass/tables.hpp"

namespace charclass {

namespace {

void require_threefold(const MapContext& ctx) {
  if (ctx.source_dim() != 3 || ctx.target_dim() != 4) {
    throw ContextError("threefold characters need a map from a 3-fold to P^4");
  }
}

SourceClass eval(const MapContext& ctx, std::string_view name) {
  return evaluate_abstract_class(ctx, thom_polynomial(name, ctx.kappa()));
}

Polynomial hyperplane_power(int exponent, int cap) {
  return (Polynomial(1) + Polynomial(VariableId::source_hyperplane())).with_cap(cap).pow(exponent);
}

// Evaluates a universal class on a map X_level -> Y whose quotient Chern class is
// numerator / c(T X_level). Landweber-Novikov classes are pushed through the table,
// so they are only meaningful when Y is the ambient of the table.
Polynomial evaluate_on_submanifold(const GysinTable& table, const AbstractClass& p, const Polynomial& numerator) {
  const int k = table.sub_dim();
  Polynomial total = Polynomial(1).with_cap(k);
  for (int i = 1; i <= k; ++i) total += table.chern(i);
  const Polynomial quotient = numerator.with_cap(k) * invert_unit_series(total, k);
  std::vector<Polynomial> c;
  for (int i = 1; i <= k; ++i) c.push_back(component_of_weight(quotient, i));

  Assignment assignment;
  for (const auto& [m, coeff] : p.body.terms()) {
    for (const auto& [var, e] : m.factors()) {
      if (assignment.contains(var)) continue;
      if (var.kind() == VarKind::QuotientChern) {
        assignment.emplace(var, var.index() <= k ? c[var.index() - 1] : Polynomial(0));
      } else if (var.kind() == VarKind::LandweberNovikov) {
        const MultiIndex& index = var.multi_index();
        Polynomial monomial = Polynomial(1).with_cap(k);
        for (int i = 1; i <= index.length(); ++i) {
          monomial *= (i <= k ? c[i - 1] : Polynomial(0)).pow(index.exponent(i));
        }
        assignment.emplace(var, table.push(monomial));
      }
    }
  }
  return substitute(p.body.with_kappa(std::nullopt), assignment, k);
}

}  // namespace

std::vector<std::pair<std::string, Scalar>> ThreefoldCharacters::named() const {
  return {{"d", d},
          {"mu0", basic.mu0},
          {"t", basic.t},
          {"gamma", basic.gamma},
          {"q", basic.q},
          {"s_t", basic.s_t},
          {"chi_C", basic.chi_C},
          {"m1", elementary.m1},
          {"m2", elementary.m2},
          {"m3", elementary.m3},
          {"D_swallowtail", elementary.D_swallowtail},
          {"B_plus_D", elementary.B_plus_D},
          {"total_polar", elementary.total_polar},
          {"K_dot_S", K_dot_S},
          {"chi_X", chi_X},
          {"chi_D", chi_D}};
}

ThreefoldBasic threefold_basic(const MapContext& f) {
  require_threefold(f);
  ThreefoldBasic b;
  b.mu0 = Rational(1, 2) * degree(f, eval(f, "A0^2"));
  b.t = Rational(1, 3) * degree(f, eval(f, "A0^3"));
  b.gamma = degree(f, eval(f, "A1"));
  b.q = Rational(1, 4) * integrate(f, eval(f, "A0^4"));
  b.s_t = integrate(f, eval(f, "A0A1"));
  b.chi_C = weighted_euler(f, ssm_series("A1", 1));
  return b;
}

Scalar stationary_points_alt(const MapContext& f) {
  require_threefold(f);
  return integrate(f, eval(f, "A1A0"));
}

ThreefoldXi threefold_invert(const Scalar& d, const ThreefoldBasic& b) {
  const Scalar d2 = d * d;
  const Scalar d3 = d2 * d;
  const Scalar d4 = d3 * d;
  const Rational half(1, 2);
  const Rational three_halves(3, 2);
  return {
      5 * d - d2 + 2 * b.mu0,
      25 * d - 10 * d2 + d3 + (20 - 3 * d) * b.mu0 + 3 * b.t - b.gamma,
      10 * d - 5 * d2 + d3 + (10 - 3 * d) * b.mu0 + 3 * b.t - 2 * b.gamma,
      125 * d - 75 * d2 + 15 * d3 - d4 + (150 - 45 * d + 4 * d2 - 2 * b.mu0) * b.mu0 + 4 * b.q - half * b.s_t +
          (45 - 4 * d) * b.t + (-10 + half * d) * b.gamma - b.chi_C,
      50 * d - 35 * d2 + 10 * d3 - d4 + (70 - 30 * d + 4 * d2 - 2 * b.mu0) * b.mu0 + 4 * b.q +
          (30 - 4 * d) * b.t - 5 * b.gamma - 2 * b.chi_C,
      10 * d - 10 * d2 + 5 * d3 - d4 + (20 - 15 * d + 4 * d2 - 2 * b.mu0) * b.mu0 + 4 * b.q +
          three_halves * b.s_t + (15 - 4 * d) * b.t + (10 - three_halves * d) * b.gamma - 4 * b.chi_C,
  };
}

CriticalSurfaceRing critical_surface_calculus(const MapContext& f) {
  require_threefold(f);
  const MapContext g = project_context(f);
  const Polynomial cg = quotient_chern(g)[0].poly();
  const Polynomial c1 = f.source_chern(1).poly();
  const Polynomial c2 = f.source_chern(2).poly();
  std::map<MultiIndex, Polynomial> images{
      {MultiIndex{}, cg},
      {MultiIndex{1}, -cg.pow(2) + cg * c1},
      {MultiIndex{0, 1}, cg.pow(3) - cg.pow(2) * c1 + cg * c2},
      {MultiIndex{2}, cg.pow(3) - 2 * cg.pow(2) * c1 + cg * c1.pow(2)},
  };
  return CriticalSurfaceRing(1, 2, 3, std::move(images));
}

ElementaryCharacters elementary_characters(const MapContext& f) {
  require_threefold(f);
  const MapContext g = project_context(f);
  const CriticalSurfaceRing s1 = critical_surface_calculus(f);
  ElementaryCharacters e;
  e.m1 = degree(g, evaluate_abstract_class(g, thom_polynomial("A1", 0)));

  // h: S1 -> P^2 with c(h) = (1 + at)^3 / c(T S1).
  const Polynomial h_numerator = hyperplane_power(3, 2);
  const Polynomial c1h = evaluate_on_submanifold(s1, thom_polynomial("A1", 0), h_numerator);
  // S(h) = S2 + cusp curve of g.
  e.m2 = degree(f, SourceClass(s1.push(c1h))) - degree(g, evaluate_abstract_class(g, thom_polynomial("A2", 0)));
  e.m3 = 4 * f.xi({}) - f.xi({0, 0, 1}) + 2 * f.xi({0, 1}) - 3 * f.xi({1});

  e.D_swallowtail = integrate(g, evaluate_abstract_class(g, thom_polynomial("A3", 0)));
  e.B_plus_D = integrate(f, SourceClass(s1.push(evaluate_on_submanifold(s1, thom_polynomial("A2", 0), h_numerator))));

  // S(h) inside S1, then h': S(h) -> P^1 with c(h') = (1 + at)^2 / c(T S(h)).
  const GysinTable sh(2, 1, 2,
                      {{MultiIndex{}, c1h}, {MultiIndex{1}, c1h * s1.chern(1) - c1h.pow(2)}});
  const Polynomial c1h_prime = evaluate_on_submanifold(sh, thom_polynomial("A1", 0), hyperplane_power(2, 1));
  e.total_polar = integrate(f, SourceClass(s1.push(sh.push(c1h_prime))));
  return e;
}

DoubleLocus double_locus_calculus(const MapContext& f) {
  require_threefold(f);
  const SourceClass s0 = eval(f, "A0^2");
  const SourceClass s1 = s0 * s0 - 2 * eval(f, "A0^3");
  const SourceClass s01 = eval(f, "A0A1");
  const SourceClass s2 = Rational(1, 2) * (6 * eval(f, "A0^4") - s0 * s0 * s0 + 3 * (s0 * s1) - 2 * s01);
  const SourceClass c1 = f.source_chern(1);
  const SourceClass c2 = f.source_chern(2);

  const SourceClass p1 = c1 * s0 - s1;
  const SourceClass p11 = s2 - c1 * c1 * s0 + 2 * (c1 * p1);
  const SourceClass p2 = c2 * s0 - c1 * p1 + p11 - s01;

  GysinTable table(3, 2, 3,
                   {{MultiIndex{}, s0.poly()}, {MultiIndex{1}, p1.poly()}, {MultiIndex{2}, p11.poly()},
                    {MultiIndex{0, 1}, p2.poly()}});
  return DoubleLocus{std::move(table), s0, p1, p11, p2,
                     degree(f, s0), degree(f, p1), degree(f, p11), degree(f, p2)};
}

std::pair<SourceClass, SourceClass> double_locus_consistency(const MapContext& f, const DoubleLocus& locus) {
  require_threefold(f);
  // c(phi) = c(TM) / c(T Gamma').
  const Polynomial numerator = f.total_chern().poly();
  const Polynomial two = locus.table.push(evaluate_on_submanifold(locus.table, thom_polynomial("A0^2", 1), numerator));
  const Polynomial three = locus.table.push(evaluate_on_submanifold(locus.table, thom_polynomial("A0^3", 1), numerator));
  return {SourceClass(two) - 2 * eval(f, "A0^3"),
          SourceClass(Rational(1, 3) * three) - eval(f, "A0^4")};
}

Scalar canonical_dot_critical(const MapContext& f) {
  require_threefold(f);
  return integrate(f, -(f.source_chern(1) * eval(f, "A1")));
}

ThreefoldCharacters threefold_characters(const MapContext& f) {
  ThreefoldCharacters ch;
  ch.d = f.xi({});
  ch.basic = threefold_basic(f);
  ch.elementary = elementary_characters(f);
  ch.K_dot_S = canonical_dot_critical(f);
  ch.chi_X = weighted_euler(f, ssm_series("alpha_im", 1));
  ch.chi_D = weighted_euler(f, ssm_series("alpha_im(2)", 1));
  return ch;
}

}  // namespace charclass
