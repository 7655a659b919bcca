#pragma once

#include <cstdint>
#include <vector>

#include "satmps/boolean/bit_matrix.hpp"
#include "satmps/sat/cnf.hpp"

namespace satmps::boolean {

using BitRow = std::vector<std::uint64_t>;

// Greedy Gram-Schmidt with OR as addition and implication as the projection
// test. Rows are visited in index order; a row's residual starts as the row,
// every basis vector contained in the residual is removed from it, and a
// nonzero residual joins the basis. Each row is then the OR of the basis
// vectors contained in it. The size depends on the visiting order.
std::vector<BitRow> boolean_basis(const BitMatrix& matrix);

// True iff every nonzero row equals the OR of the basis vectors it contains.
bool spans_rows(const BitMatrix& matrix, const std::vector<BitRow>& basis);

std::size_t distinct_nonzero_rows(const BitMatrix& matrix);

// Number of singular values above cutoff * largest.
int svd_rank(const BitMatrix& matrix, double cutoff = 1e-10);

struct DimensionPoint {
  int m = 0;
  int boolean_dim = 0;
  int svd_rank = 0;
};

// One point per clause prefix m = 0..instance.m().
std::vector<DimensionPoint> compare_dimensions(const sat::CnfInstance& instance, int cut);

}  // namespace satmps::boolean
