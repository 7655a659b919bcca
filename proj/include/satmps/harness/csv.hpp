#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace satmps::harness {

// Shortest decimal that reads back to the same double; "nan", "inf", "-inf"
// for non-finite values.
std::string format_double(double v);

// RFC 4180: quote fields containing a comma, quote, CR or LF; double quotes.
std::string csv_escape(std::string_view field);

inline std::string cell(double v) { return format_double(v); }
inline std::string cell(int v) { return std::to_string(v); }
inline std::string cell(long v) { return std::to_string(v); }
inline std::string cell(long long v) { return std::to_string(v); }
inline std::string cell(unsigned long v) { return std::to_string(v); }
inline std::string cell(unsigned long long v) { return std::to_string(v); }
inline std::string cell(bool v) { return v ? "true" : "false"; }
inline std::string cell(std::string v) { return v; }
inline std::string cell(const char* v) { return v; }

using Row = std::vector<std::string>;

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  // Throws std::invalid_argument on a width mismatch.
  void add(Row row);
  void append(const std::vector<Row>& rows);
  // Optional comment lines are written first, each prefixed with "# ".
  void write(std::ostream& out, const std::vector<std::string>& comments = {}) const;
  std::string str(const std::vector<std::string>& comments = {}) const;

 private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
};

}  // namespace satmps::harness
