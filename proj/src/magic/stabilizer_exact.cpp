#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "satmps/magic/stabilizer.hpp"
#include "satmps/simd/kernels.hpp"

namespace satmps::magic {
namespace {

// Calls visit(flip, phase, expectation^2) for every string with even Y count.
template <class Visit>
void for_each_expectation(const dense::DenseState& state, Visit&& visit) {
  const dense::DenseState psi = state.normalized();
  const std::size_t dim = psi.dimension();
  std::vector<double> g(dim);
  for (std::size_t flip = 0; flip < dim; ++flip) {
    simd::pair_products(g, psi.amplitudes(), flip);
    simd::walsh_hadamard(g);
    for (std::size_t phase = 0; phase < dim; ++phase) {
      // The Y count is |flip & phase|; odd counts have <P> = 0 for real states.
      if (std::popcount(flip & phase) & 1) continue;
      visit(flip, phase, g[phase] * g[phase]);
    }
  }
}

}  // namespace

StabilizerEntropies exact_stabilizer_entropies(const dense::DenseState& state, int limit) {
  const int n = state.n();
  if (n > limit) throw std::invalid_argument("exact stabilizer entropy: n=" + std::to_string(n) + " exceeds limit " +
                                             std::to_string(limit));
  const double inv_dim = std::ldexp(1.0, -n);
  double shannon = 0.0;
  double xi2 = 0.0;
  for_each_expectation(state, [&](std::size_t, std::size_t, double e2) {
    const double pi = e2 * inv_dim;
    if (pi > 0.0) shannon -= pi * std::log(pi);
    xi2 += e2 * e2 * inv_dim;
  });
  return StabilizerEntropies{shannon - n * std::numbers::ln2, -std::log(xi2)};
}

double exact_stabilizer_entropy(const dense::DenseState& state, int order, int limit) {
  if (order != 1 && order != 2) throw std::invalid_argument("stabilizer entropy order must be 1 or 2");
  const auto e = exact_stabilizer_entropies(state, limit);
  return order == 1 ? e.m1 : e.m2;
}

std::vector<double> pauli_distribution(const dense::DenseState& state) {
  const int n = state.n();
  if (n > 8) throw std::invalid_argument("pauli_distribution needs n <= 8");
  std::vector<double> out(std::size_t{1} << (2 * n), 0.0);
  const double inv_dim = std::ldexp(1.0, -n);
  for_each_expectation(state, [&](std::size_t flip, std::size_t phase, double e2) {
    // Site i has flip/phase bit n-1-i; symbol = 1 (X) for flip only, 3 (Z)
    // for phase only, 2 (Y) for both.
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i) {
      const unsigned f = (flip >> (n - 1 - i)) & 1U;
      const unsigned z = (phase >> (n - 1 - i)) & 1U;
      const unsigned sym = f ? (z ? 2U : 1U) : (z ? 3U : 0U);
      idx = (idx << 2) | sym;
    }
    out[idx] = e2 * inv_dim;
  });
  return out;
}

}  // namespace satmps::magic
