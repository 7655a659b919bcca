#include "satmps/sat/cnf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace satmps::sat {

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw std::invalid_argument("literal 0 is the clause terminator, not a literal");
  return Literal{value < 0 ? -value : value, value < 0};
}

Clause::Clause(Literal a, Literal b, Literal c) : literals_{a, b, c} {
  for (const auto& l : literals_)
    if (l.variable < 1) throw std::invalid_argument("variable index must be >= 1");
  if (a.variable == b.variable || a.variable == c.variable || b.variable == c.variable)
    throw std::invalid_argument("duplicate variable in clause");
}

Clause Clause::from_dimacs(int a, int b, int c) {
  return Clause(Literal::from_dimacs(a), Literal::from_dimacs(b), Literal::from_dimacs(c));
}

int Clause::max_variable() const noexcept {
  return std::max({literals_[0].variable, literals_[1].variable, literals_[2].variable});
}

int Clause::min_variable() const noexcept {
  return std::min({literals_[0].variable, literals_[1].variable, literals_[2].variable});
}

std::uint64_t Clause::mask(int n) const noexcept {
  std::uint64_t m = 0;
  for (const auto& l : literals_) m |= std::uint64_t{1} << (n - l.variable);
  return m;
}

std::uint64_t Clause::violating_pattern(int n) const noexcept {
  std::uint64_t p = 0;
  for (const auto& l : literals_)
    if (l.negated) p |= std::uint64_t{1} << (n - l.variable);
  return p;
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

Assignment Assignment::zeros(int n) {
  if (n < 0) throw std::invalid_argument("negative assignment length");
  return Assignment(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

Assignment Assignment::from_index(int n, std::uint64_t index) {
  if (n < 0 || n > 64) throw std::invalid_argument("from_index supports 0 <= n <= 64");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (index >> (n - 1 - i)) & 1U;
  return Assignment(std::move(bits));
}

std::uint64_t Assignment::to_index() const {
  if (bits_.size() > 64) throw std::invalid_argument("to_index supports n <= 64");
  std::uint64_t idx = 0;
  for (auto b : bits_) idx = (idx << 1) | b;
  return idx;
}

CnfInstance::CnfInstance(int n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {
  if (n < 0) throw std::invalid_argument("variable count must be non-negative");
  for (const auto& c : clauses_)
    if (c.max_variable() > n)
      throw std::invalid_argument("variable index " + std::to_string(c.max_variable()) + " exceeds n=" +
                                  std::to_string(n));
}

CnfInstance CnfInstance::prefix(int k) const {
  if (k < 0 || k > m()) throw std::out_of_range("prefix length out of range");
  return CnfInstance(n_, std::vector<Clause>(clauses_.begin(), clauses_.begin() + k));
}

CnfInstance CnfInstance::with_clause(const Clause& c) const {
  auto cs = clauses_;
  cs.push_back(c);
  return CnfInstance(n_, std::move(cs));
}

CnfInstance CnfInstance::permuted(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != m()) throw std::invalid_argument("permutation length differs from m");
  std::vector<char> seen(order.size(), 0);
  std::vector<Clause> cs;
  cs.reserve(order.size());
  for (int j : order) {
    if (j < 0 || j >= m() || seen[static_cast<std::size_t>(j)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(j)] = 1;
    cs.push_back(clauses_[static_cast<std::size_t>(j)]);
  }
  return CnfInstance(n_, std::move(cs));
}

bool violates(const Clause& clause, const Assignment& assignment) {
  for (const auto& l : clause.literals())
    if (l.satisfied_by(assignment.value(l.variable))) return false;
  return true;
}

ViolationCount violations(const CnfInstance& instance, const Assignment& assignment) {
  if (assignment.size() != instance.n())
    throw std::invalid_argument("assignment length " + std::to_string(assignment.size()) +
                                " does not match n=" + std::to_string(instance.n()));
  int count = 0;
  for (const auto& c : instance.clauses()) count += violates(c, assignment) ? 1 : 0;
  return ViolationCount{count};
}

int violations_at_index(const CnfInstance& instance, std::uint64_t index) {
  const int n = instance.n();
  int count = 0;
  for (const auto& c : instance.clauses()) count += ((index & c.mask(n)) == c.violating_pattern(n)) ? 1 : 0;
  return count;
}

}  // namespace satmps::sat
