#pragma once

#include "charclass/chern.hpp"
#include "charclass/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace charclass {

struct SurfaceCharacters {
  Scalar mu0, mu1, mu2, kappa_cusps, eps0, eps1, rho, C, T;
  Scalar chi_Sg, chi_D;
  // Euler characteristic of the image surface; no printed value to compare against.
  Scalar chi_X;

  std::vector<std::pair<std::string, Scalar>> named() const;
};

// Requires a (2, 3) context.
SurfaceCharacters surface_characters(const MapContext& ctx);

struct SurfaceXi {
  Scalar xi1, xi2, xi01;
};

// Chern degrees from (d, eps0, C, T).
SurfaceXi surface_invert(const Scalar& d, const Scalar& eps0, const Scalar& C, const Scalar& T);

// The five classical relations and the omega / I invariants; residuals must vanish.
ValidationReport verify_surface_relations(const SurfaceCharacters& ch, const Scalar& xi2, const Scalar& xi01);
ValidationReport verify_surface_relations(const MapContext& ctx);

}  // namespace charclass
