#pragma once

#include <iosfwd>

#include "lsq/runconfig.hpp"

namespace lsq {

// Executes one run: computes the requested quantity, writes the CSV data
// file and appends one JSON line to the run log. Returns the process exit
// code: 0 success, 1 numerical failure, 2 configuration or I/O failure.
int run(const RunConfig& config);

// Built-in invariant suite behind the --check flag. Prints one line per
// check; returns 0 when everything holds, 1 otherwise.
int run_check(std::ostream& out);

}  // namespace lsq
