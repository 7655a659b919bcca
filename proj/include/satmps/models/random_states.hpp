#pragma once

#include <cstdint>

#include "satmps/boolean/bit_matrix.hpp"
#include "satmps/util/random.hpp"

namespace satmps::models {

// Number of unit amplitudes at filling f: round(2^{f n}), at least 1.
std::uint64_t filling_count(int n, double f);

// Random 0/1 state on n bits with exactly `ones` unit amplitudes at distinct,
// uniformly chosen positions, laid out as a matrix cut after `cut` bits.
boolean::BitMatrix random_combinatorial_state(int n, std::uint64_t ones, int cut, Rng& rng);

// Entanglement entropy of the normalized 0/1 state held in the matrix, from
// the eigenvalues of its row Gram matrix.
double bit_matrix_entropy(const boolean::BitMatrix& matrix);

inline double sample_combinatorial_entropy(int n, std::uint64_t ones, int cut, Rng& rng) {
  return bit_matrix_entropy(random_combinatorial_state(n, ones, cut, rng));
}

}  // namespace satmps::models
