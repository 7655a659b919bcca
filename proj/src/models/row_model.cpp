#include "satmps/models/row_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satmps/util/random.hpp"

namespace satmps::models {
namespace {

double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

constexpr double kShrink[3] = {1.0 - 1.0 / 8.0, 1.0 - 1.0 / 4.0, 1.0 - 1.0 / 2.0};

// Chance that a clause related in the given number of ways appeared among the
// c - 1 earlier ones: 1 - (1 - related/N)^{c-1}.
struct Redundancy {
  double total;
  int earlier;
  double operator()(double related) const { return 1.0 - std::pow(1.0 - related / total, earlier); }
};

struct Accumulator {
  double sum = 0.0, sum2 = 0.0;
  int count = 0;
  void add(double x) {
    sum += x;
    sum2 += x * x;
    ++count;
  }
  double mean() const { return count ? sum / count : std::nan(""); }
  double sd() const {
    if (count < 2) return count ? 0.0 : std::nan("");
    const double mu = sum / count;
    return std::sqrt(std::max(0.0, (sum2 - count * mu * mu) / (count - 1)));
  }
};

}  // namespace

double hypergeometric_pmf(int i, int n_row, int n_col, int k) {
  return choose(n_row, i) * choose(n_col, k - i) / choose(n_row + n_col, k);
}

double binomial_half_pmf(int i, int k) { return choose(k, i) / std::exp2(k); }

double row_model_mean_log(int n, int m, bool hypergeometric) {
  double rate = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double p = hypergeometric ? hypergeometric_pmf(i, n / 2, n / 2, 3) : binomial_half_pmf(i, 3);
    rate += std::exp2(-i) * p * std::log(kShrink[i]);
  }
  return 0.5 * n * std::numbers::ln2 + m * rate;
}

std::vector<RowModelPoint> row_model_simulate(const RowModelConfig& config) {
  const int n = config.n;
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("row model needs even n >= 6");
  if (config.m < 0 || config.samples < 1) throw std::invalid_argument("row model needs m >= 0 and samples >= 1");
  const int half = n / 2;
  const double total = 2.0 * n * (2.0 * n - 2.0) * (2.0 * n - 4.0);
  const double n1 = 3.0 * half * (half - 1.0);
  const double n2 = 6.0 * half;
  const double n3 = 3.0 * half * 2.0 * (half - 1.0);
  const double n4 = 6.0;
  const double n5 = 6.0 * 2.0 * (half - 1.0);
  const double n6 = 3.0 * 2.0 * (half - 1.0) * 2.0 * (half - 2.0);

  std::vector<Accumulator> all(static_cast<std::size_t>(config.m) + 1), alive(all.size());
  const double start = half * std::numbers::ln2;
  for (int s = 0; s < config.samples; ++s) {
    Rng rng(derive_seed(config.seed, streams::row_model, static_cast<std::uint64_t>(s)));
    double log_omega = start;
    bool live = true;
    all[0].add(log_omega);
    alive[0].add(log_omega);
    for (int c = 1; c <= config.m; ++c) {
      // Three distinct variables; count those in the row space.
      int i = 0, rows_left = half, left = n;
      for (int t = 0; t < 3; ++t, --left)
        if (rng.below(static_cast<std::uint64_t>(left)) < static_cast<std::uint64_t>(rows_left)) {
          ++i;
          --rows_left;
        }
      bool acts = rng.bernoulli(std::exp2(-i));
      if (acts && config.corrections) {
        const Redundancy seen{total, c - 1};
        if (i == 2) {
          if (rng.bernoulli(seen(n1)))
            acts = false;
          else if (rng.bernoulli(seen(n1)))
            i = 3;
        } else if (i == 1) {
          if (rng.bernoulli(seen(n2))) {
            acts = false;
          } else {
            for (int r = 0; r < 2; ++r)
              if (rng.bernoulli(seen(n3))) ++i;
          }
        } else if (i == 0) {
          if (rng.bernoulli(seen(n4))) {
            acts = false;
          } else {
            for (int r = 0; r < 3; ++r)
              if (rng.bernoulli(seen(n5))) ++i;
            for (int r = 0; r < 3; ++r)
              if (rng.bernoulli(seen(n6))) i += 2;
          }
        }
      }
      if (acts) {
        if (i >= 3)
          live = false;
        else
          log_omega += std::log(kShrink[i]);
      }
      all[static_cast<std::size_t>(c)].add(log_omega);
      if (live) alive[static_cast<std::size_t>(c)].add(log_omega);
    }
  }

  std::vector<RowModelPoint> out;
  out.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    RowModelPoint p;
    p.m = static_cast<int>(k);
    p.mean_log = all[k].mean();
    p.sd_log = all[k].sd();
    p.mean_log_alive = alive[k].mean();
    p.sd_log_alive = alive[k].sd();
    p.alive = alive[k].count;
    p.alive_fraction = static_cast<double>(alive[k].count) / config.samples;
    out.push_back(p);
  }
  return out;
}

}  // namespace satmps::models
