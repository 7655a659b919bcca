#include "satmps/boolean/bit_matrix.hpp"

#include <stdexcept>

#include "satmps/simd/kernels.hpp"

namespace satmps::boolean {

BitMatrix::BitMatrix(int rows_log2, int cols_log2, bool fill)
    : rows_log2_(rows_log2), cols_log2_(cols_log2), words_(0) {
  if (rows_log2 < 0 || cols_log2 < 0 || rows_log2 + cols_log2 > 34)
    throw std::invalid_argument("bit matrix dimensions out of range");
  words_ = (cols() + 63) / 64;
  bits_.assign(rows() * words_, fill ? ~std::uint64_t{0} : 0);
  if (fill && cols() % 64 != 0) {
    const std::uint64_t tail = (std::uint64_t{1} << (cols() % 64)) - 1;
    for (std::size_t r = 0; r < rows(); ++r) bits_[r * words_ + words_ - 1] = tail;
  }
}

BitMatrix BitMatrix::all_ones(int n, int cut) {
  if (cut < 0 || cut > n) throw std::invalid_argument("cut must be in [0, n]");
  return BitMatrix(cut, n - cut, true);
}

BitMatrix BitMatrix::from_prefix(const sat::CnfInstance& instance, int m, int cut) {
  BitMatrix b = all_ones(instance.n(), cut);
  for (int j = 0; j < m; ++j) b.apply_clause(instance.clause(j));
  return b;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (bits_.at(r * words_ + c / 64) >> (c % 64)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = bits_.at(r * words_ + c / 64);
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::span<const std::uint64_t> BitMatrix::row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }

std::span<std::uint64_t> BitMatrix::row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

void BitMatrix::apply_clause(const sat::Clause& clause) {
  const int n = rows_log2_ + cols_log2_;
  if (clause.max_variable() > n) throw std::invalid_argument("clause refers to a variable beyond n");
  // Split the violating pattern into row and column parts.
  std::uint64_t row_mask = 0, row_pat = 0, col_mask = 0, col_pat = 0;
  for (const auto& l : clause.literals()) {
    if (l.variable <= rows_log2_) {
      const std::uint64_t bit = std::uint64_t{1} << (rows_log2_ - l.variable);
      row_mask |= bit;
      if (l.negated) row_pat |= bit;
    } else {
      const std::uint64_t bit = std::uint64_t{1} << (n - l.variable);
      col_mask |= bit;
      if (l.negated) col_pat |= bit;
    }
  }
  BitMatrix cols_hit(0, cols_log2_, false);
  auto hit = cols_hit.row(0);
  for (std::size_t c = 0; c < cols(); ++c)
    if ((c & col_mask) == col_pat) hit[c / 64] |= std::uint64_t{1} << (c % 64);
  for (std::size_t r = 0; r < rows(); ++r)
    if ((r & row_mask) == row_pat) simd::and_not_assign(row(r), hit);
}

std::uint64_t BitMatrix::row_count(std::size_t r) const { return simd::popcount(row(r)); }

std::uint64_t BitMatrix::count() const { return simd::popcount(bits_); }

Eigen::MatrixXd BitMatrix::to_dense() const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = get(r, c) ? 1.0 : 0.0;
  return m;
}

}  // namespace satmps::boolean
