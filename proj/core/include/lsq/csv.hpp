#pragma once

#include <string>
#include <vector>

namespace lsq {

// Data files are byte-reproducible: header row, comma separator, '.' decimal,
// 17 significant digits, LF line endings. NaN cells render as empty fields
// (used for "not applicable" columns).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string format_double(double value);

std::string to_csv(const CsvTable& table);

// Throws lsq::Error when the path cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lsq
