#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "satmps/sat/cnf.hpp"

namespace satmps::sat {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(const std::string& what, int line) : std::runtime_error(format(what, line)), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& what, int line) {
    return line > 0 ? "dimacs line " + std::to_string(line) + ": " + what : "dimacs: " + what;
  }
  int line_;
};

// Accepts comment lines ("c ..."), clauses spanning or sharing lines, and the
// SATLIB "%" end marker. Every clause must have exactly three literals over
// distinct variables.
CnfInstance parse_dimacs(std::istream& in);
CnfInstance parse_dimacs(std::string_view text);
CnfInstance read_dimacs_file(const std::filesystem::path& path);

// Canonical form: "p cnf n m" then one "a b c 0" line per clause.
std::string to_dimacs(const CnfInstance& instance);
void write_dimacs(std::ostream& out, const CnfInstance& instance);
void write_dimacs_file(const std::filesystem::path& path, const CnfInstance& instance);

}  // namespace satmps::sat
