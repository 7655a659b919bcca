#pragma once

#include <cstdint>
#include <vector>

#include "satmps/dense/state.hpp"
#include "satmps/magic/pauli.hpp"
#include "satmps/mps/mps.hpp"
#include "satmps/util/random.hpp"

namespace satmps::magic {

inline constexpr int kDefaultExactStabilizerLimit = 12;

struct StabilizerEntropies {
  double m1 = 0.0;  // Shannon entropy of Pi(P) = <P>^2 / 2^n, minus n ln 2
  double m2 = 0.0;  // -ln sum_P <P>^4 / 2^n
};

// Exact over all 4^n strings. For each flip pattern the expectations of all
// 2^n phase patterns come out of one Walsh-Hadamard transform, so the cost is
// O(n 4^n) rather than O(8^n).
StabilizerEntropies exact_stabilizer_entropies(const dense::DenseState& state,
                                               int limit = kDefaultExactStabilizerLimit);
double exact_stabilizer_entropy(const dense::DenseState& state, int order, int limit = kDefaultExactStabilizerLimit);

// Pi(P) for every string, indexed by PauliString::index(); n <= 8.
std::vector<double> pauli_distribution(const dense::DenseState& state);

struct MagicEstimate {
  int order = 1;
  double value = 0.0;
  double standard_error = 0.0;
  long samples = 0;
};

// <psi|P|psi> / <psi|psi> on an MPS.
double pauli_expectation(const mps::Mps& state, const PauliString& pauli);

// Exact sequential sampler of Pi(P) = <P>^2 / 2^n on an MPS. Conditionals come
// from left transfer matrices in right-canonical gauge.
class PauliSampler {
 public:
  explicit PauliSampler(mps::Mps state);

  struct Draw {
    PauliString pauli;
    double probability = 0.0;  // Pi(P)
  };
  Draw draw(Rng& rng) const;
  int size() const noexcept { return state_.size(); }

 private:
  mps::Mps state_;
};

MagicEstimate sample_m1(const mps::Mps& state, long num_samples, std::uint64_t seed);

struct MarkovOptions {
  long chain_length = 200000;
  long burn_in = -1;  // -1: 10 n
  int batches = 20;
};

// Metropolis chain on strings with stationary law Pi, started from the identity
// string. Proposals resample one site (probability 1/2), two distinct sites
// (1/4), or multiply by a string drawn from Pi (1/4). Estimates Xi_2 = E_Pi[<P>^2]
// and returns -ln of it; the error bar is from batch means.
MagicEstimate markov_m2(const mps::Mps& state, const MarkovOptions& options, std::uint64_t seed);

}  // namespace satmps::magic
