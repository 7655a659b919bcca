#include "satmps/sat/generate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "satmps/sat/counting.hpp"
#include "satmps/util/random.hpp"

namespace satmps::sat {
namespace {

void check_shape(int n, int m) {
  if (n < 3) throw std::invalid_argument("3-SAT needs n >= 3");
  if (m < 0) throw std::invalid_argument("clause count must be non-negative");
}

}  // namespace

CnfInstance random_instance(int n, int m, std::uint64_t seed) {
  check_shape(n, m);
  Rng rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    int v[3];
    v[0] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    do v[1] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    while (v[1] == v[0]);
    do v[2] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    while (v[2] == v[0] || v[2] == v[1]);
    Literal l[3];
    for (int k = 0; k < 3; ++k) l[k] = Literal{v[k], (rng.next() >> 63) != 0};
    clauses.emplace_back(l[0], l[1], l[2]);
  }
  return CnfInstance(n, std::move(clauses));
}

CnfInstance generate_satisfiable(int n, int m, std::uint64_t seed, int max_attempts) {
  check_shape(n, m);
  for (int k = 0; k < max_attempts; ++k) {
    auto inst = random_instance(n, m, derive_seed(seed, streams::rejection, static_cast<std::uint64_t>(k)));
    if (is_satisfiable(inst)) return inst;
  }
  throw RejectionBudgetExhausted("no satisfiable instance with n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                 " in " + std::to_string(max_attempts) + " attempts");
}

CnfInstance unique_solution_filter(int n, int m, std::uint64_t seed, int max_attempts) {
  check_shape(n, m);
  if (m == 0) throw RejectionBudgetExhausted("an empty instance has 2^n solutions, never exactly one");
  for (int k = 0; k < max_attempts; ++k) {
    auto inst = random_instance(n, m, derive_seed(seed, streams::rejection, static_cast<std::uint64_t>(k)));
    if (count_solutions(inst, 63) == 1) return inst;
  }
  throw RejectionBudgetExhausted("no uniquely solvable instance with n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m) + " in " + std::to_string(max_attempts) + " attempts");
}

int clauses_for_alpha(int n, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  return static_cast<int>(std::lround(alpha * n));
}

}  // namespace satmps::sat
