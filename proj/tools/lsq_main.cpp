// Command-line front end: runs one simulation described by a config file or
// a named preset and writes a CSV data file plus a JSONL run log.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lsq/errors.hpp"
#include "lsq/runconfig.hpp"
#include "lsq/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "lsq: steady state, squeezing spectrum, dressed-state structure and "
      "total-variance squeezing of a closed-loop three-level atom"};
  app.set_version_flag("--version", "lsq 0.1.0");

  std::string config_path;
  std::string preset;
  std::string output;
  bool check = false;
  app.add_option("--config", config_path,
                 "key=value config file describing the run");
  app.add_option("--preset", preset,
                 "named preset (fig2a, fig2b, fig3, fig4, fig5); needs --output");
  app.add_option("--output", output, "output CSV path for --preset runs");
  app.add_flag("--check", check, "run the built-in invariant suite and exit");

  CLI11_PARSE(app, argc, argv);

  if (check) {
    return lsq::run_check(std::cout);
  }

  std::string config_text;
  if (!config_path.empty()) {
    std::ifstream file(config_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot read config file '" << config_path << "'\n";
      return 2;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    config_text = buffer.str();
  } else if (!preset.empty()) {
    if (output.empty()) {
      std::cerr << "error: --preset requires --output\n";
      return 2;
    }
    config_text =
        "mode=preset\npreset=" + preset + "\noutput=" + output + "\n";
  } else {
    std::cerr << app.help();
    return 2;
  }

  try {
    return lsq::run(lsq::parse_config(config_text));
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
}
