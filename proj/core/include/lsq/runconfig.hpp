#pragma once

#include <optional>
#include <string>

#include "lsq/params.hpp"

namespace lsq {

enum class RunMode {
  spectrum,
  spectrum_oracle,
  dressed,
  variance,
  omega3_sweep,
  phi_sweep,
  preset,
};

const char* mode_name(RunMode mode);

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

// One fully validated run request. For mode == preset, `params` stays empty
// and the preset definition supplies everything.
struct RunConfig {
  RunMode mode = RunMode::spectrum;
  std::optional<SystemParams> params;
  std::optional<GridSpec> grid;  // per-mode defaults apply when absent
  double theta = 0.0;
  std::string output;
  std::optional<std::string> preset;
  std::optional<std::string> log_path;  // default: output with .jsonl suffix
};

// Flat key=value format, one pair per line, '#' starts a comment.
// Keys: mode, preset, gamma1, gamma2, delta1, delta2, omega1, omega2,
// omega3, phi, theta, grid (min,max,points), output, log.
// Unknown and duplicate keys are hard errors. Throws ParseError with the
// offending line number or ValidationError naming the key.
RunConfig parse_config(const std::string& text);

// Log file location used when the config does not name one.
std::string default_log_path(const std::string& output);

}  // namespace lsq
