#include "satmps/models/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "satmps/simd/kernels.hpp"

namespace satmps::models {

std::uint64_t filling_count(int n, double f) {
  if (n < 1 || n > 34) throw std::invalid_argument("n out of range");
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("filling fraction must be in [0, 1]");
  const auto total = std::uint64_t{1} << n;
  const auto ones = static_cast<std::uint64_t>(std::llround(std::exp2(f * n)));
  return std::clamp<std::uint64_t>(ones, 1, total);
}

boolean::BitMatrix random_combinatorial_state(int n, std::uint64_t ones, int cut, Rng& rng) {
  if (cut < 0 || cut > n) throw std::invalid_argument("cut must be in [0, n]");
  const auto total = std::uint64_t{1} << n;
  if (ones > total) throw std::invalid_argument("more ones than basis states");
  // Mark the smaller of the two sets, starting from the matching fill.
  const bool mark_zeros = ones > total / 2;
  const std::uint64_t marks = mark_zeros ? total - ones : ones;
  boolean::BitMatrix b(cut, n - cut, mark_zeros);
  const std::size_t col_bits = static_cast<std::size_t>(n - cut);
  const std::uint64_t col_mask = (std::uint64_t{1} << col_bits) - 1;
  std::uint64_t placed = 0;
  while (placed < marks) {
    const std::uint64_t x = rng.below(total);
    const std::size_t r = x >> col_bits, c = x & col_mask;
    if (b.get(r, c) == mark_zeros) {
      b.set(r, c, !mark_zeros);
      ++placed;
    }
  }
  return b;
}

double bit_matrix_entropy(const boolean::BitMatrix& matrix) {
  const double total = static_cast<double>(matrix.count());
  if (total == 0.0) throw std::domain_error("entropy of the zero state");
  const auto rows = static_cast<Eigen::Index>(matrix.rows());
  Eigen::MatrixXd gram(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      gram(i, j) = gram(j, i) = static_cast<double>(
          simd::and_popcount(matrix.row(static_cast<std::size_t>(i)), matrix.row(static_cast<std::size_t>(j))));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double p = eig.eigenvalues()(i) / total;
    if (p > 1e-15) s -= p * std::log(p);
  }
  return s;
}

}  // namespace satmps::models
