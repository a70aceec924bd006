#pragma once

#include "charclass/chern.hpp"
#include "charclass/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace charclass {

// The seven generating characters besides the degree.
struct ThreefoldBasic {
  Scalar mu0, t, gamma, q, s_t, chi_C;
};

struct ThreefoldXi {
  Scalar xi1, xi2, xi01, xi3, xi11, xi001;
};

struct ElementaryCharacters {
  Scalar m1, m2, m3;
  // Sub-counts of the critical points of the projected polar curve.
  Scalar D_swallowtail, B_plus_D, total_polar;
};

struct ThreefoldCharacters {
  Scalar d;
  ThreefoldBasic basic;
  ElementaryCharacters elementary;
  Scalar K_dot_S;
  // Euler characteristics of the image and of the double surface; not cross-checked.
  Scalar chi_X, chi_D;

  std::vector<std::pair<std::string, Scalar>> named() const;
};

// All functions below require a (3, 4) context.
ThreefoldBasic threefold_basic(const MapContext& ctx);
// s_t recomputed from the other stationary-point Thom polynomial.
Scalar stationary_points_alt(const MapContext& ctx);
ThreefoldXi threefold_invert(const Scalar& d, const ThreefoldBasic& basic);

// Critical surface S1 of the projection g: M -> P^3, as a submanifold of level 1.
using CriticalSurfaceRing = GysinTable;
CriticalSurfaceRing critical_surface_calculus(const MapContext& ctx);
ElementaryCharacters elementary_characters(const MapContext& ctx);

struct DoubleLocus {
  // Resolution of the source double surface, as a submanifold of level 3.
  GysinTable table;
  // phi_*(1), phi_*(c1), phi_*(c1^2), phi_*(c2) with c_k = c_k(T Gamma').
  SourceClass push_one, push_c1, push_c1sq, push_c2;
  Scalar deg_one, deg_c1, deg_c1sq, deg_c2;
};

DoubleLocus double_locus_calculus(const MapContext& ctx);
// phi_* tp(A0^2)(phi) - 2 tp(A0^3)(f) and (1/3) phi_* tp(A0^3)(phi) - tp(A0^4)(f).
std::pair<SourceClass, SourceClass> double_locus_consistency(const MapContext& ctx, const DoubleLocus& locus);

Scalar canonical_dot_critical(const MapContext& ctx);

ThreefoldCharacters threefold_characters(const MapContext& ctx);

}  // namespace charclass
