#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "satmps/sat/cnf.hpp"

namespace satmps::boolean {

// Boolean amplitude matrix of a bipartitioned n-bit state: row = the first
// `cut` bits, column = the remaining bits. Rows are packed 64 columns per word.
class BitMatrix {
 public:
  BitMatrix(int rows_log2, int cols_log2, bool fill);
  // All-ones matrix of an n-variable state cut after `cut` variables.
  static BitMatrix all_ones(int n, int cut);
  static BitMatrix from_prefix(const sat::CnfInstance& instance, int m, int cut);

  int rows_log2() const noexcept { return rows_log2_; }
  int cols_log2() const noexcept { return cols_log2_; }
  std::size_t rows() const noexcept { return std::size_t{1} << rows_log2_; }
  std::size_t cols() const noexcept { return std::size_t{1} << cols_log2_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);
  std::span<const std::uint64_t> row(std::size_t r) const;
  std::span<std::uint64_t> row(std::size_t r);

  // Clears every entry violating the clause (the clause projector in Boolean form).
  void apply_clause(const sat::Clause& clause);

  std::uint64_t row_count(std::size_t r) const;
  std::uint64_t count() const;
  // Rows as 0/1 doubles.
  Eigen::MatrixXd to_dense() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int rows_log2_;
  int cols_log2_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace satmps::boolean
