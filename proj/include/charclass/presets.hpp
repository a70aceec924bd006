#pragma once

#include "charclass/chern.hpp"

#include <string>
#include <vector>

namespace charclass {

// xi-data of M with H^*(M) generated by one class h, where at = hyper * h,
// c(TM) = (1 + h)^power / (1 + e h) and int_M h^m = top.
std::map<MultiIndex, Scalar> xi_from_single_generator(int m, const Scalar& hyper, int power, const Scalar& e,
                                                      const Scalar& top);

// P^2 -> P^3 through the quadratic Veronese surface: the Steiner Roman surface.
MapContext roman_surface();
// P^3 -> P^4 through the quadratic Veronese embedding in P^9.
MapContext veronese_p3();
// Smooth hypersurfaces of degree d (numeric, or the atom d for symbolic work).
MapContext smooth_surface(const Scalar& d);
MapContext smooth_threefold(const Scalar& d);

std::vector<std::string> preset_names();

}  // namespace charclass
