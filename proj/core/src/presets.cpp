#include "lsq/presets.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lsq/errors.hpp"

namespace lsq {

namespace {

// Step of one degree for the phase sweep.
const double kDeg = M_PI / 180.0;

const std::array<Preset, 5>& presets() {
  static const std::array<Preset, 5> table = {{
      {"fig2a",
       make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, 10.0, 0.0),
       {-120.0, 120.0, 2001},
       0.0},
      {"fig2b",
       make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, 10.0, M_PI),
       {-120.0, 120.0, 2001},
       0.0},
      {"fig3",
       make_params(20.0, 1.0, 0.0, 0.0, 8.0, 8.0, 3.0, -M_PI / 2.0),
       {0.0, 10.0, 201},
       0.0},
      {"fig4",
       make_params(20.0, 1.0, 0.0, 0.0, 8.0, 8.0, 3.0, -M_PI / 2.0),
       {0.0, 10.0, 201},
       0.0},
      {"fig5",
       make_params(20.0, 1.0, 0.0, 0.0, 8.0, 8.0, 3.0, -M_PI / 2.0),
       {-M_PI + kDeg, M_PI, 360},
       0.0},
  }};
  return table;
}

}  // namespace

std::span<const Preset> all_presets() {
  return {presets().data(), presets().size()};
}

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : presets()) {
    if (p.name == name) {
      return p;
    }
  }
  throw ValidationError("preset", "unknown preset '" + std::string(name) +
                                      "' (have fig2a, fig2b, fig3, fig4, fig5)");
}

}  // namespace lsq
