#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "csr/matrix.hpp"

namespace csr::io {

// Numeric CSV with a required header row and optional '#' comment lines
// above it. Metadata lines use the form
//   # csr:<tag> key=value key=value ...
struct Csv {
  std::vector<std::string> comments; // without the leading '#', trimmed
  std::vector<std::string> header;
  Matrix data;

  int rows() const { return data.rows(); }
  int cols() const { return data.cols(); }
};

Csv read_csv(const std::filesystem::path& path);

// key=value pairs of the first "csr:<tag>" comment; empty map when absent.
std::map<std::string, std::string> metadata(const Csv& csv, const std::string& tag);
std::string make_metadata_line(const std::string& tag,
                               const std::vector<std::pair<std::string, std::string>>& kv);

// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

// Write-temp-then-rename so readers never observe a partial file.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& header, const Matrix& data);

void write_text_atomic(const std::filesystem::path& path, const std::string& text);

} // namespace csr::io
