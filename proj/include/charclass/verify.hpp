#pragma once

#include "charclass/report.hpp"
#include "charclass/surface.hpp"
#include "charclass/threefold.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charclass {

enum class Suite { Tables, Surface, Threefold, All };

std::optional<Suite> parse_suite(std::string_view name);

// A reference xi-line that is known to be misprinted: the engine must differ from
// it by exactly engine_minus_printed, and must agree with the closed form.
struct KnownMisprint {
  std::string character;
  std::string printed;
  std::string engine_minus_printed;
};

const std::vector<KnownMisprint>& known_misprints();

ValidationReport verify_tables();
ValidationReport verify_surface();
ValidationReport verify_threefold();
ValidationReport run_suite(Suite suite);

// Identity checks for one computed character set; integrality is advisory.
ValidationReport surface_diagnostics(const MapContext& ctx, const SurfaceCharacters& ch);
ValidationReport threefold_diagnostics(const MapContext& ctx, const ThreefoldCharacters& ch);

}  // namespace charclass
