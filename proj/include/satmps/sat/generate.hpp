#pragma once

#include <cstdint>
#include <stdexcept>

#include "satmps/sat/cnf.hpp"

namespace satmps::sat {

inline constexpr int kDefaultRejectionBudget = 10000;

class RejectionBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// m independent clauses: a uniform 3-subset of variables, uniform polarities.
// Duplicate clauses are allowed. Deterministic in seed.
CnfInstance random_instance(int n, int m, std::uint64_t seed);

// Rejection sampling: attempt k draws random_instance with a seed derived from
// (seed, k) until the instance is satisfiable.
CnfInstance generate_satisfiable(int n, int m, std::uint64_t seed, int max_attempts = kDefaultRejectionBudget);

// Same, conditioned on exactly one satisfying assignment.
CnfInstance unique_solution_filter(int n, int m, std::uint64_t seed, int max_attempts = kDefaultRejectionBudget);

// m = round(alpha * n), the rounding rule used by every sweep.
int clauses_for_alpha(int n, double alpha);

}  // namespace satmps::sat
