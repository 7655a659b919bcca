#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace satmps::sat {

struct Literal {
  int variable = 1;  // 1-based
  bool negated = false;

  int to_dimacs() const noexcept { return negated ? -variable : variable; }
  static Literal from_dimacs(int value);
  // A literal is false under an assignment iff the variable's bit equals `negated`.
  bool satisfied_by(bool bit) const noexcept { return bit != negated; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Exactly three literals over three distinct variables.
class Clause {
 public:
  Clause(Literal a, Literal b, Literal c);
  static Clause from_dimacs(int a, int b, int c);

  const std::array<Literal, 3>& literals() const noexcept { return literals_; }
  const Literal& operator[](std::size_t i) const noexcept { return literals_[i]; }
  int max_variable() const noexcept;
  int min_variable() const noexcept;

  // Basis-index form for n <= 64 (x_1 is the most significant bit): the clause is
  // violated by index x iff (x & mask) == pattern.
  std::uint64_t mask(int n) const noexcept;
  std::uint64_t violating_pattern(int n) const noexcept;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::array<Literal, 3> literals_;
};

class Assignment {
 public:
  explicit Assignment(std::vector<std::uint8_t> bits);
  static Assignment zeros(int n);
  // Big-endian: x_1 is bit n-1 of the index.
  static Assignment from_index(int n, std::uint64_t index);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  // 1-based variable access.
  bool value(int variable) const { return bits_.at(static_cast<std::size_t>(variable - 1)) != 0; }
  void set(int variable, bool v) { bits_.at(static_cast<std::size_t>(variable - 1)) = v ? 1 : 0; }
  std::uint64_t to_index() const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct ViolationCount {
  int count = 0;
  bool any() const noexcept { return count > 0; }
  friend auto operator<=>(const ViolationCount&, const ViolationCount&) = default;
};

class CnfInstance {
 public:
  CnfInstance() = default;
  CnfInstance(int n, std::vector<Clause> clauses);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(clauses_.size()); }
  double alpha() const noexcept { return n_ > 0 ? static_cast<double>(m()) / n_ : 0.0; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const Clause& clause(int j) const { return clauses_.at(static_cast<std::size_t>(j)); }

  // First k clauses, same n.
  CnfInstance prefix(int k) const;
  CnfInstance with_clause(const Clause& c) const;
  // Clauses reordered by `order` (a permutation of 0..m-1).
  CnfInstance permuted(std::span<const int> order) const;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  int n_ = 0;
  std::vector<Clause> clauses_;
};

bool violates(const Clause& clause, const Assignment& assignment);
ViolationCount violations(const CnfInstance& instance, const Assignment& assignment);
// Fast path on basis indices; requires n <= 64.
int violations_at_index(const CnfInstance& instance, std::uint64_t index);

}  // namespace satmps::sat
