#include "csr/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace csr::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool parse_number(const std::string& field, double& out) {
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (*first == '+') ++first; // from_chars rejects an explicit plus
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

} // namespace

Csv read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");

  Csv csv;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      csv.comments.push_back(trim(stripped.substr(1)));
      continue;
    }
    if (!have_header) {
      csv.header = split_fields(stripped);
      double probe;
      if (parse_number(csv.header.front(), probe))
        throw DataError("'" + path.string() + "' line " + std::to_string(line_no) +
                        ": expected a header row, found numeric data");
      have_header = true;
      continue;
    }
    const std::vector<std::string> fields = split_fields(stripped);
    if (fields.size() != csv.header.size())
      throw DataError("'" + path.string() + "' line " + std::to_string(line_no) + ": " +
                      std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(csv.header.size()));
    std::vector<double> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (!parse_number(fields[c], row[c]))
        throw DataError("'" + path.string() + "' line " + std::to_string(line_no) +
                        ", column " + std::to_string(c + 1) + ": '" + fields[c] +
                        "' is not a number");
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw DataError("'" + path.string() + "' has no header row");

  csv.data = Matrix(static_cast<int>(rows.size()), static_cast<int>(csv.header.size()));
  for (int i = 0; i < csv.data.rows(); ++i)
    for (int j = 0; j < csv.data.cols(); ++j)
      csv.data(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return csv;
}

std::map<std::string, std::string> metadata(const Csv& csv, const std::string& tag) {
  std::map<std::string, std::string> kv;
  const std::string want = "csr:" + tag;
  for (const std::string& c : csv.comments) {
    std::istringstream is(c);
    std::string word;
    is >> word;
    if (word != want) continue;
    while (is >> word) {
      const auto eq = word.find('=');
      if (eq != std::string::npos) kv[word.substr(0, eq)] = word.substr(eq + 1);
    }
    break;
  }
  return kv;
}

std::string make_metadata_line(const std::string& tag,
                               const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string line = "csr:" + tag;
  for (const auto& [k, v] : kv) line += " " + k + "=" + v;
  return line;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.good()) throw DataError("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& header, const Matrix& data) {
  if (static_cast<int>(header.size()) != data.cols())
    throw DataError("write_csv: header size does not match data columns");
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << "\n";
  for (std::size_t j = 0; j < header.size(); ++j)
    out << (j ? "," : "") << header[j];
  out << "\n";
  for (int i = 0; i < data.rows(); ++i) {
    for (int j = 0; j < data.cols(); ++j)
      out << (j ? "," : "") << format_double(data(i, j));
    out << "\n";
  }
  write_text_atomic(path, out.str());
}

} // namespace csr::io
