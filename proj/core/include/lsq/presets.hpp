#pragma once

#include <span>
#include <string_view>

#include "lsq/params.hpp"
#include "lsq/runconfig.hpp"

namespace lsq {

// Canned parameter sets that regenerate the reference data sets. Each preset
// carries the base (solid-curve) parameters; the runner knows which second
// series a given preset needs (field off, opposite phase, ...).
struct Preset {
  std::string_view name;
  SystemParams params;
  GridSpec grid;
  double theta;
};

std::span<const Preset> all_presets();

// Throws ValidationError for unknown names.
const Preset& find_preset(std::string_view name);

}  // namespace lsq
