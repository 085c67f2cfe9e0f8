#include "lsq/runconfig.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "lsq/errors.hpp"
#include "lsq/presets.hpp"

namespace lsq {

const char* mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::spectrum: return "spectrum";
    case RunMode::spectrum_oracle: return "spectrum-oracle";
    case RunMode::dressed: return "dressed";
    case RunMode::variance: return "variance";
    case RunMode::omega3_sweep: return "omega3-sweep";
    case RunMode::phi_sweep: return "phi-sweep";
    case RunMode::preset: return "preset";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view value, int line) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "malformed number '" + std::string(value) + "'");
  }
  return out;
}

int parse_int(std::string_view value, int line) {
  int out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "malformed integer '" + std::string(value) + "'");
  }
  return out;
}

RunMode parse_mode(std::string_view value) {
  for (RunMode m : {RunMode::spectrum, RunMode::spectrum_oracle,
                    RunMode::dressed, RunMode::variance,
                    RunMode::omega3_sweep, RunMode::phi_sweep,
                    RunMode::preset}) {
    if (value == mode_name(m)) {
      return m;
    }
  }
  throw ValidationError("mode", "unknown mode '" + std::string(value) + "'");
}

constexpr std::string_view kNumericKeys[] = {
    "gamma1", "gamma2", "delta1", "delta2", "omega1",
    "omega2", "omega3", "phi",    "theta"};
constexpr std::string_view kStringKeys[] = {"mode", "preset", "output", "log"};

bool is_numeric_key(std::string_view key) {
  for (auto k : kNumericKeys) {
    if (k == key) {
      return true;
    }
  }
  return false;
}

bool is_string_key(std::string_view key) {
  for (auto k : kStringKeys) {
    if (k == key) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string default_log_path(const std::string& output) {
  const auto slash = output.find_last_of('/');
  const auto dot = output.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return output.substr(0, dot) + ".jsonl";
  }
  return output + ".jsonl";
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, double, std::less<>> numbers;
  std::map<std::string, std::string, std::less<>> strings;
  std::map<std::string, int, std::less<>> first_line;
  std::optional<GridSpec> grid;

  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    std::string_view line = trim(raw_line);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected key=value");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty()) {
      throw ParseError(line_no, "empty key");
    }
    if (value.empty()) {
      throw ParseError(line_no, "empty value for key '" + key + "'");
    }
    if (first_line.count(key) != 0) {
      throw ValidationError(key, "duplicate key (first on line " +
                                     std::to_string(first_line[key]) + ")");
    }
    first_line[key] = line_no;

    // Values are checked during the scan so syntax errors carry their line.
    if (is_numeric_key(key)) {
      numbers[key] = parse_number(value, line_no);
    } else if (is_string_key(key)) {
      strings[key] = value;
    } else if (key == "grid") {
      std::string_view v = value;
      const auto c1 = v.find(',');
      const auto c2 = c1 == std::string_view::npos ? c1 : v.find(',', c1 + 1);
      if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
        throw ParseError(line_no, "grid must be min,max,points");
      }
      GridSpec spec;
      spec.min = parse_number(trim(v.substr(0, c1)), line_no);
      spec.max = parse_number(trim(v.substr(c1 + 1, c2 - c1 - 1)), line_no);
      spec.points = parse_int(trim(v.substr(c2 + 1)), line_no);
      if (spec.points < 2) {
        throw ValidationError("grid", "needs at least 2 points");
      }
      if (!(spec.max > spec.min)) {
        throw ValidationError("grid", "needs max > min");
      }
      grid = spec;
    } else {
      throw ValidationError(key, "unknown key");
    }
  }

  auto require_string = [&](const char* key) -> std::string {
    auto it = strings.find(key);
    if (it == strings.end()) {
      throw ValidationError(key, "required key is missing");
    }
    return it->second;
  };
  auto require_number = [&](const char* key) -> double {
    auto it = numbers.find(key);
    if (it == numbers.end()) {
      throw ValidationError(key, "required key is missing");
    }
    return it->second;
  };

  RunConfig config;
  config.mode = parse_mode(require_string("mode"));
  config.output = require_string("output");
  if (auto it = strings.find("log"); it != strings.end()) {
    config.log_path = it->second;
  }
  if (auto it = numbers.find("theta"); it != numbers.end()) {
    if (!std::isfinite(it->second)) {
      throw ValidationError("theta", "must be finite");
    }
    config.theta = normalize_angle(it->second);
  }
  config.grid = grid;

  if (config.mode == RunMode::preset) {
    config.preset = require_string("preset");
    find_preset(*config.preset);  // throws ValidationError on unknown names
    // A preset overrides any parameter keys that were also given.
  } else {
    if (strings.count("preset") != 0) {
      throw ValidationError("preset", "only valid with mode=preset");
    }
    const double gamma2 =
        numbers.count("gamma2") != 0 ? numbers["gamma2"] : 1.0;
    config.params = make_params(
        require_number("gamma1"), gamma2, require_number("delta1"),
        require_number("delta2"), require_number("omega1"),
        require_number("omega2"), require_number("omega3"),
        require_number("phi"));
  }

  if (config.mode == RunMode::phi_sweep && config.grid) {
    if (config.grid->min <= -M_PI - 1e-12 || config.grid->max > M_PI + 1e-12) {
      throw ValidationError("grid", "phi grid must lie within (-pi, pi]");
    }
  }
  return config;
}

}  // namespace lsq
