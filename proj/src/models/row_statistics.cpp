#include "satmps/models/row_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "satmps/boolean/bit_matrix.hpp"
#include "satmps/sat/generate.hpp"
#include "satmps/util/random.hpp"

namespace satmps::models {
namespace {

struct Moments {
  double sum = 0.0, sum2 = 0.0;
  std::uint64_t count = 0;
  void add(double x, std::uint64_t times = 1) {
    sum += x * static_cast<double>(times);
    sum2 += x * x * static_cast<double>(times);
    count += times;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : std::nan(""); }
  double sd() const {
    if (count < 2) return count ? 0.0 : std::nan("");
    const double c = static_cast<double>(count), mu = sum / c;
    return std::sqrt(std::max(0.0, (sum2 - c * mu * mu) / (c - 1.0)));
  }
};

}  // namespace

std::vector<std::vector<std::uint64_t>> row_solution_counts(const sat::CnfInstance& instance, int cut) {
  boolean::BitMatrix b = boolean::BitMatrix::all_ones(instance.n(), cut);
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(static_cast<std::size_t>(instance.m()) + 1);
  for (int m = 0; m <= instance.m(); ++m) {
    if (m > 0) b.apply_clause(instance.clause(m - 1));
    std::vector<std::uint64_t> counts(b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r) counts[r] = b.row_count(r);
    out.push_back(std::move(counts));
  }
  return out;
}

std::vector<RowStatisticsPoint> empirical_row_statistics(const RowStatisticsConfig& config) {
  if (config.n < 6 || config.n % 2 != 0 || config.n > 26) throw std::invalid_argument("row statistics need even n in [6, 26]");
  if (config.m_max < 0 || config.instances < 1) throw std::invalid_argument("row statistics need m_max >= 0 and instances >= 1");
  const auto size = static_cast<std::size_t>(config.m_max) + 1;
  std::vector<Moments> per_instance(size), pooled(size);
  std::vector<double> count_sum(size, 0.0);
  const double rows = std::exp2(config.n / 2);
  for (int k = 0; k < config.instances; ++k) {
    const auto inst = sat::random_instance(config.n, config.m_max,
                                           derive_seed(config.seed, streams::instances, static_cast<std::uint64_t>(k)));
    boolean::BitMatrix b = boolean::BitMatrix::all_ones(config.n, config.n / 2);
    for (int m = 0; m <= config.m_max; ++m) {
      if (m > 0) b.apply_clause(inst.clause(m - 1));
      const auto idx = static_cast<std::size_t>(m);
      double total = 0.0;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        const auto c = b.row_count(r);
        if (c == 0) continue;
        total += static_cast<double>(c);
        pooled[idx].add(std::log(static_cast<double>(c)));
      }
      count_sum[idx] += total / rows;
      if (total > 0.0) per_instance[idx].add(std::log(total / rows));
    }
  }
  std::vector<RowStatisticsPoint> out;
  out.reserve(size);
  for (std::size_t m = 0; m < size; ++m) {
    RowStatisticsPoint p;
    p.m = static_cast<int>(m);
    p.mean_log = per_instance[m].mean();
    p.sd_log = per_instance[m].sd();
    p.instances = static_cast<int>(per_instance[m].count);
    p.mean_log_alive = pooled[m].mean();
    p.sd_log_alive = pooled[m].sd();
    p.rows_alive = pooled[m].count;
    p.zero_violation_mean = count_sum[m] / config.instances;
    out.push_back(p);
  }
  return out;
}

}  // namespace satmps::models
