#include "satmps/sat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace satmps::sat {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view tok) {
  long long v = 0;
  const auto* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [p, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

CnfInstance parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long declared_m = 0;
  std::vector<Clause> clauses;
  std::vector<int> pending;
  int pending_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == 'c') continue;
    if (tokens[0] == "%") break;
    if (tokens[0] == "p") {
      if (have_header) throw DimacsError("second header line", line_no);
      if (tokens.size() != 4 || tokens[1] != "cnf") throw DimacsError("malformed header, expected 'p cnf n m'", line_no);
      auto nv = to_integer(tokens[2]);
      auto mv = to_integer(tokens[3]);
      if (!nv || !mv || *nv < 0 || *mv < 0 || *nv > (1 << 30))
        throw DimacsError("malformed header counts", line_no);
      n = static_cast<int>(*nv);
      declared_m = *mv;
      have_header = true;
      continue;
    }
    if (!have_header) throw DimacsError("clause data before 'p cnf' header", line_no);
    for (auto tok : tokens) {
      auto v = to_integer(tok);
      if (!v) throw DimacsError("non-integer token '" + std::string(tok) + "'", line_no);
      if (*v == 0) {
        if (pending.size() != 3)
          throw DimacsError("clause has " + std::to_string(pending.size()) + " literals, expected 3", line_no);
        try {
          clauses.push_back(Clause::from_dimacs(pending[0], pending[1], pending[2]));
        } catch (const std::invalid_argument& e) {
          throw DimacsError(e.what(), line_no);
        }
        pending.clear();
        continue;
      }
      if (*v > n || *v < -n) throw DimacsError("variable index " + std::string(tok) + " out of range", line_no);
      if (pending.empty()) pending_line = line_no;
      pending.push_back(static_cast<int>(*v));
      if (pending.size() > 3) throw DimacsError("clause has more than 3 literals", line_no);
    }
  }
  if (!have_header) throw DimacsError("missing 'p cnf' header", 0);
  if (!pending.empty()) throw DimacsError("unterminated clause at end of input", pending_line);
  if (static_cast<long long>(clauses.size()) != declared_m)
    throw DimacsError("header declares " + std::to_string(declared_m) + " clauses, found " +
                          std::to_string(clauses.size()),
                      0);
  return CnfInstance(n, std::move(clauses));
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

CnfInstance read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfInstance& instance) {
  std::string out = "p cnf " + std::to_string(instance.n()) + " " + std::to_string(instance.m()) + "\n";
  for (const auto& c : instance.clauses()) {
    for (const auto& l : c.literals()) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

void write_dimacs(std::ostream& out, const CnfInstance& instance) { out << to_dimacs(instance); }

void write_dimacs_file(const std::filesystem::path& path, const CnfInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dimacs(out, instance);
}

}  // namespace satmps::sat
