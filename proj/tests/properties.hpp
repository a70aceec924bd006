#pragma once

// Randomized identities with fixed seeds. Each check returns an empty string on
// success, otherwise a description of the first failing case.
#include "charclass/chern.hpp"
#include "charclass/surface.hpp"
#include "charclass/threefold.hpp"

#include <random>
#include <string>

namespace properties {

using namespace charclass;


constexpr int kCases = 1000;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational() { return Rational(integer(-20, 20), integer(1, 6)); }

  Polynomial monomial(const std::vector<VariableId>& vars, int max_exp) {
    Polynomial m(rational());
    for (const auto& v : vars) {
      const int e = integer(0, max_exp);
      if (e > 0) m *= Polynomial(v).pow(e);
    }
    return m;
  }

  Polynomial poly(const std::vector<VariableId>& vars, int max_terms, int max_exp) {
    Polynomial p;
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) p += monomial(vars, max_exp);
    return p;
  }

  // Homogeneous of the given weight in at and c_k(TM), k <= m.
  Polynomial source_homogeneous(int weight, int m) {
    Polynomial p;
    for (const auto& index : MultiIndex::all_up_to(weight)) {
      if (integer(0, 2) == 0) continue;
      bool ok = true;
      for (int k = m + 1; k <= index.length(); ++k) ok = ok && index.exponent(k) == 0;
      if (!ok) continue;
      Polynomial term = Polynomial(rational()) * Polynomial(VariableId::source_hyperplane()).pow(weight - index.weight());
      for (int k = 1; k <= index.length(); ++k) term *= Polynomial(VariableId::source_chern(k)).pow(index.exponent(k));
      p += term;
    }
    return p;
  }

  Polynomial source_class(int m) {
    Polynomial p;
    for (int w = 0; w <= m; ++w) p += source_homogeneous(w, m);
    return p.with_cap(m);
  }

 private:
  std::mt19937 rng_;
};

inline const std::vector<VariableId>& ring_vars() {
  static const std::vector<VariableId> vars = {
      VariableId::quotient_chern(1), VariableId::quotient_chern(2), VariableId::landweber_novikov({}),
      VariableId::landweber_novikov({1}), VariableId::degree()};
  return vars;
}

inline MapContext random_context(Gen& g, int m) {
  std::map<MultiIndex, Scalar> xi;
  for (const auto& index : required_xi(m)) xi.emplace(index, Polynomial(g.rational()));
  return make_context(m, m + 1 + g.integer(0, 1), std::move(xi));
}


inline std::string ring_laws(int cases = kCases) {
  Gen g(1);
  for (int i = 0; i < cases; ++i) {
    const std::optional<int> cap = g.integer(0, 1) ? std::optional<int>(g.integer(1, 5)) : std::nullopt;
    const Polynomial a = g.poly(ring_vars(), 4, 2).with_kappa(1).with_cap(cap);
    const Polynomial b = g.poly(ring_vars(), 4, 2).with_kappa(1).with_cap(cap);
    const Polynomial c = g.poly(ring_vars(), 4, 2).with_kappa(1).with_cap(cap);
    if (!(a + b == b + a)) return "case " + std::to_string(i) + ": a + b == b + a";
    if (!(a * b == b * a)) return "case " + std::to_string(i) + ": a * b == b * a";
    if (!((a + b) + c == a + (b + c))) return "case " + std::to_string(i) + ": (a + b) + c == a + (b + c)";
    if (!((a * b) * c == a * (b * c))) return "case " + std::to_string(i) + ": (a * b) * c == a * (b * c)";
    if (!(a * (b + c) == a * b + a * c)) return "case " + std::to_string(i) + ": a * (b + c) == a * b + a * c";
    if (!(a - a == Polynomial())) return "case " + std::to_string(i) + ": a - a == Polynomial()";
    if (!(a * Polynomial(1) == a)) return "case " + std::to_string(i) + ": a * Polynomial(1) == a";
  }
  return "";
}

inline std::string series_inversion(int cases = kCases) {
  Gen g(2);
  const std::vector<VariableId> vars = {VariableId::quotient_chern(1), VariableId::quotient_chern(2),
                                        VariableId::quotient_chern(3), VariableId::source_hyperplane()};
  for (int i = 0; i < cases; ++i) {
    const int cap = g.integer(0, 6);
    Polynomial tail = g.poly(vars, 5, 2);
    tail -= Polynomial(tail.constant_term());
    const Polynomial p = (Polynomial(1) + tail).with_cap(cap);
    const Polynomial q = invert_unit_series(p, cap);
    if (!((p * q).with_cap(cap) == Polynomial(1))) return "case " + std::to_string(i) + ": (p * q).with_cap(cap) == Polynomial(1)";
    Polynomial sum;
    for (int w = 0; w <= cap; ++w) sum += component_of_weight(p, w);
    if (!(sum == p)) return "case " + std::to_string(i) + ": sum == p";
  }
  return "";
}

inline std::string substitution_homomorphism(int cases = kCases) {
  Gen g(3);
  const std::vector<VariableId> vars = {VariableId::quotient_chern(1), VariableId::quotient_chern(2),
                                        VariableId::quotient_chern(3), VariableId::degree()};
  for (int i = 0; i < cases; ++i) {
    const int m = g.integer(1, 4);
    Assignment assignment;
    for (int k = 1; k <= 3; ++k) assignment.emplace(VariableId::quotient_chern(k), g.source_homogeneous(k, m));
    const Polynomial p = g.poly(vars, 3, 2);
    const Polynomial q = g.poly(vars, 3, 2);
    if (!(substitute(p * q, assignment, m) == (substitute(p, assignment, m) * substitute(q, assignment, m)).with_cap(m))) return "case " + std::to_string(i) + ": substitute(p * q, assignment, m) == (substitute(p, assignment, m) * substitute(q, assignment, m)).with_cap(m)";
    if (!(substitute(p + q, assignment, m) == substitute(p, assignment, m) + substitute(q, assignment, m))) return "case " + std::to_string(i) + ": substitute(p + q, assignment, m) == substitute(p, assignment, m) + substitute(q, assignment, m)";
  }
  return "";
}

inline std::string projection_formula(int cases = kCases) {
  Gen g(4);
  for (int i = 0; i < cases; ++i) {
    const MapContext f = random_context(g, g.integer(1, 3));
    const SourceClass x(g.source_class(f.source_dim()));
    Polynomial y;
    for (int k = 0; k <= f.target_dim(); ++k) {
      if (g.integer(0, 1)) y += Polynomial(g.rational()) * Polynomial(VariableId::target_hyperplane()).pow(k);
    }
    const TargetClass ty(y.with_cap(f.target_dim()));
    if (!(pushforward(f, pullback(f, ty) * x) == ty * pushforward(f, x))) return "case " + std::to_string(i) + ": pushforward(f, pullback(f, ty) * x) == ty * pushforward(f, x)";
    if (!(integrate(f, x) == coefficient_of_power(pushforward(f, x), f.target_dim()))) return "case " + std::to_string(i) + ": integrate(f, x) == coefficient_of_power(pushforward(f, x), f.target_dim())";
  }
  return "";
}

inline std::string surface_round_trip(int cases = kCases) {
  Gen g(5);
  for (int i = 0; i < cases; ++i) {
    const Scalar d(g.rational()), eps0(g.rational()), C(g.rational()), T(g.rational());
    const SurfaceXi xi = surface_invert(d, eps0, C, T);
    const MapContext f = make_context(2, 3, {{{}, d}, {{1}, xi.xi1}, {{2}, xi.xi2}, {{0, 1}, xi.xi01}});
    const SurfaceCharacters ch = surface_characters(f);
    if (!(ch.eps0 == eps0)) return "case " + std::to_string(i) + ": ch.eps0 == eps0";
    if (!(ch.C == C)) return "case " + std::to_string(i) + ": ch.C == C";
    if (!(ch.T == T)) return "case " + std::to_string(i) + ": ch.T == T";
  }
  return "";
}

inline std::string threefold_round_trip(int cases = kCases) {
  Gen g(6);
  for (int i = 0; i < cases; ++i) {
    const Scalar d(g.rational());
    const ThreefoldBasic basic{g.rational(), g.rational(), g.rational(), g.rational(), g.rational(), g.rational()};
    const ThreefoldXi xi = threefold_invert(d, basic);
    const MapContext f = make_context(
        3, 4,
        {{{}, d}, {{1}, xi.xi1}, {{2}, xi.xi2}, {{0, 1}, xi.xi01}, {{3}, xi.xi3}, {{1, 1}, xi.xi11}, {{0, 0, 1}, xi.xi001}});
    const ThreefoldBasic back = threefold_basic(f);
    if (!(back.mu0 == basic.mu0)) return "case " + std::to_string(i) + ": back.mu0 == basic.mu0";
    if (!(back.t == basic.t)) return "case " + std::to_string(i) + ": back.t == basic.t";
    if (!(back.gamma == basic.gamma)) return "case " + std::to_string(i) + ": back.gamma == basic.gamma";
    if (!(back.q == basic.q)) return "case " + std::to_string(i) + ": back.q == basic.q";
    if (!(back.s_t == basic.s_t)) return "case " + std::to_string(i) + ": back.s_t == basic.s_t";
    if (!(back.chi_C == basic.chi_C)) return "case " + std::to_string(i) + ": back.chi_C == basic.chi_C";
  }
  return "";
}

}  // namespace properties
