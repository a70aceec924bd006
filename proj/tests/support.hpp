#pragma once

#include "charclass/polynomial.hpp"

#include <string_view>

inline charclass::Polynomial P(std::string_view text) { return charclass::parse_polynomial(text); }
