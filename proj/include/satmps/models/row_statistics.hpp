#pragma once

#include <cstdint>
#include <vector>

#include "satmps/sat/cnf.hpp"

namespace satmps::models {

// Satisfying completions per row of the n/2 | n/2 split, after each clause
// prefix m = 0..instance.m(). Result[m][row].
std::vector<std::vector<std::uint64_t>> row_solution_counts(const sat::CnfInstance& instance, int cut);

struct RowStatisticsConfig {
  int n = 20;
  int m_max = 100;
  int instances = 200;
  std::uint64_t seed = 0;
};

// Empirical counterpart of the row model over random (unconditioned) instances.
// Unconditioned: per instance ln(mean row count), averaged over the instances
// where that mean is positive. Conditioned: ln(count) pooled over all rows
// with a positive count.
struct RowStatisticsPoint {
  int m = 0;
  double mean_log = 0.0;
  double sd_log = 0.0;
  int instances = 0;
  double mean_log_alive = 0.0;
  double sd_log_alive = 0.0;
  std::uint64_t rows_alive = 0;
  double zero_violation_mean = 0.0;  // mean row count over all rows
};

std::vector<RowStatisticsPoint> empirical_row_statistics(const RowStatisticsConfig& config);

}  // namespace satmps::models
