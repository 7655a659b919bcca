#include "satmps/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace satmps::harness {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("a CSV table needs at least one column");
}

void CsvTable::add(Row row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("CSV row has " + std::to_string(row.size()) + " cells, expected " +
                                std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

void CsvTable::append(const std::vector<Row>& rows) {
  for (const auto& r : rows) add(r);
}

void CsvTable::write(std::ostream& out, const std::vector<std::string>& comments) const {
  for (const auto& c : comments) out << "# " << c << '\n';
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(r[i]);
    }
    out << '\n';
  };
  line(columns_);
  for (const auto& r : rows_) line(r);
}

std::string CsvTable::str(const std::vector<std::string>& comments) const {
  std::ostringstream os;
  write(os, comments);
  return os.str();
}

}  // namespace satmps::harness
