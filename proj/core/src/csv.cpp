#include "lsq/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "lsq/errors.hpp"

namespace lsq {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c > 0) {
      out += ',';
    }
    out += table.header[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      if (!std::isnan(row[c])) {
        out += format_double(row[c]);
      }
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error("cannot open '" + path + "' for writing");
  }
  file << content;
  file.flush();
  if (!file) {
    throw Error("failed while writing '" + path + "'");
  }
}

}  // namespace lsq
