#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "satmps/sat/cnf.hpp"

namespace satmps::sat {

inline constexpr int kDefaultExactCountLimit = 26;
inline constexpr int kDefaultEnumerationLimit = 16;

class CountLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute force over all 2^n assignments.
std::uint64_t count_solutions_enumerate(const CnfInstance& instance, int limit = kDefaultEnumerationLimit);

// DPLL counter: unit propagation, unconstrained variables contribute a factor
// of two each, branching on the lowest-index constrained variable (0 first).
std::uint64_t count_solutions_dpll(const CnfInstance& instance, int limit = kDefaultExactCountLimit);

// Exact model count (DPLL).
std::uint64_t count_solutions(const CnfInstance& instance, int limit = kDefaultExactCountLimit);

// DPLL decision with unit propagation and pure-literal elimination.
bool is_satisfiable(const CnfInstance& instance);

// All satisfying assignments as basis indices (x_1 most significant), ascending.
// Throws CountLimitExceeded when more than max_solutions exist. Requires n <= 63.
std::vector<std::uint64_t> enumerate_solutions(const CnfInstance& instance, std::size_t max_solutions);

}  // namespace satmps::sat
