#include "charclass/surface.hpp"

#include "charclass/tables.hpp"

namespace charclass {

namespace {

void require_surface(const MapContext& ctx) {
  if (ctx.source_dim() != 2 || ctx.target_dim() != 3) {
    throw ContextError("surface characters need a map from a surface to P^3");
  }
}

}  // namespace

std::vector<std::pair<std::string, Scalar>> SurfaceCharacters::named() const {
  return {{"mu0", mu0}, {"mu1", mu1},   {"mu2", mu2},      {"kappa_cusps", kappa_cusps},
          {"eps0", eps0}, {"eps1", eps1}, {"rho", rho},      {"C", C},
          {"T", T},     {"chi_Sg", chi_Sg}, {"chi_D", chi_D}, {"chi_X", chi_X}};
}

SurfaceCharacters surface_characters(const MapContext& f) {
  require_surface(f);
  const MapContext g = project_context(f);
  SurfaceCharacters ch;
  ch.mu0 = f.xi({});
  ch.C = degree(f, evaluate_abstract_class(f, thom_polynomial("A1", 1)));
  ch.T = Rational(1, 3) * degree(f, evaluate_abstract_class(f, thom_polynomial("A0^3", 1)));
  const SourceClass gamma = evaluate_abstract_class(f, thom_polynomial("A0^2", 1));
  ch.eps0 = Rational(1, 2) * degree(f, gamma);

  ch.kappa_cusps = degree(g, evaluate_abstract_class(g, thom_polynomial("A2", 0)));
  const SourceClass critical = evaluate_abstract_class(g, thom_polynomial("A1", 0));
  ch.mu1 = degree(g, critical);
  ch.chi_Sg = weighted_euler(g, ssm_series("A1", 0));
  // Riemann-Hurwitz for the contour curve projected to a line.
  ch.mu2 = 2 * ch.mu1 - ch.chi_Sg - ch.kappa_cusps;
  // Gamma and S(g) meet transversally; crosscaps lie in both.
  ch.rho = integrate(f, gamma * critical) - ch.C;

  ch.chi_D = weighted_euler(f, ssm_series("alpha_im(2)", 1));
  // Resolving the triple points of D adds 2 per point; D' -> P^1 has degree eps0.
  ch.eps1 = 2 * ch.eps0 - (ch.chi_D + 2 * ch.T);
  ch.chi_X = weighted_euler(f, ssm_series("alpha_im", 1));
  return ch;
}

SurfaceXi surface_invert(const Scalar& d, const Scalar& eps0, const Scalar& C, const Scalar& T) {
  return {
      d * (4 - d) + 2 * eps0,
      d * (d - 4).pow(2) + (16 - 3 * d) * eps0 + 3 * T - C,
      d * (d * d - 4 * d + 6) + (8 - 3 * d) * eps0 + 3 * T - 2 * C,
  };
}

ValidationReport verify_surface_relations(const SurfaceCharacters& ch, const Scalar& xi2, const Scalar& xi01) {
  const Scalar& d = ch.mu0;
  ValidationReport report;
  report.add(residual_check("Salmon relation: d(d-1) = mu1 + 2 eps0", d * (d - 1) - ch.mu1 - 2 * ch.eps0));
  report.add(residual_check("Salmon relation: mu1(d-2) = kappa + rho", ch.mu1 * (d - 2) - ch.kappa_cusps - ch.rho));
  report.add(residual_check("Salmon relation: eps0(d-2) = rho + 3T", ch.eps0 * (d - 2) - ch.rho - 3 * ch.T));
  report.add(residual_check("Salmon relation: 2 rho - 2 eps1 = C", 2 * ch.rho - 2 * ch.eps1 - ch.C));
  report.add(residual_check("Salmon relation: mu2 + 2C = mu1 + kappa", ch.mu2 + 2 * ch.C - ch.mu1 - ch.kappa_cusps));
  const Scalar omega = ch.mu2 - 6 * ch.mu1 + 9 * ch.mu0 + ch.C + 1;
  const Scalar zeuthen_segre = ch.mu2 - 2 * ch.mu1 + 3 * ch.mu0 - 4;
  report.add(residual_check("omega = xi2 + 1", omega - (xi2 + 1)));
  report.add(residual_check("I = xi01 - 4", zeuthen_segre - (xi01 - 4)));
  report.add(residual_check("omega + I = xi2 + xi01 - 3", omega + zeuthen_segre - (xi2 + xi01 - 3)));
  return report;
}

ValidationReport verify_surface_relations(const MapContext& ctx) {
  return verify_surface_relations(surface_characters(ctx), ctx.xi({2}), ctx.xi({0, 1}));
}

}  // namespace charclass
