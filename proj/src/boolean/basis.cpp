#include "satmps/boolean/basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "satmps/mps/linalg.hpp"
#include "satmps/simd/kernels.hpp"

namespace satmps::boolean {

std::vector<BitRow> boolean_basis(const BitMatrix& matrix) {
  std::vector<BitRow> basis;
  BitRow residual(matrix.words_per_row());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const auto row = matrix.row(r);
    if (simd::popcount(row) == 0) continue;
    std::copy(row.begin(), row.end(), residual.begin());
    for (const auto& b : basis)
      if (simd::is_subset(b, residual)) simd::and_not_assign(residual, b);
    if (simd::popcount(residual) != 0) basis.push_back(residual);
  }
  return basis;
}

bool spans_rows(const BitMatrix& matrix, const std::vector<BitRow>& basis) {
  BitRow cover(matrix.words_per_row());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const auto row = matrix.row(r);
    if (simd::popcount(row) == 0) continue;
    std::fill(cover.begin(), cover.end(), 0);
    for (const auto& b : basis)
      if (simd::is_subset(b, row))
        for (std::size_t w = 0; w < cover.size(); ++w) cover[w] |= b[w];
    if (!std::equal(cover.begin(), cover.end(), row.begin())) return false;
  }
  return true;
}

std::size_t distinct_nonzero_rows(const BitMatrix& matrix) {
  std::set<BitRow> seen;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const auto row = matrix.row(r);
    if (simd::popcount(row) == 0) continue;
    seen.emplace(row.begin(), row.end());
  }
  return seen.size();
}

int svd_rank(const BitMatrix& matrix, double cutoff) {
  const Eigen::VectorXd s = linalg::singular_values(matrix.to_dense());
  if (s.size() == 0 || !(s(0) > 0.0)) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff * s(0)) ++r;
  return r;
}

std::vector<DimensionPoint> compare_dimensions(const sat::CnfInstance& instance, int cut) {
  if (instance.n() > 24) throw std::invalid_argument("compare_dimensions needs n <= 24");
  BitMatrix b = BitMatrix::all_ones(instance.n(), cut);
  std::vector<DimensionPoint> out;
  out.reserve(static_cast<std::size_t>(instance.m()) + 1);
  for (int m = 0; m <= instance.m(); ++m) {
    if (m > 0) b.apply_clause(instance.clause(m - 1));
    out.push_back(DimensionPoint{m, static_cast<int>(boolean_basis(b).size()), svd_rank(b)});
  }
  return out;
}

}  // namespace satmps::boolean
