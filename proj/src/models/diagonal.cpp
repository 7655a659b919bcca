#include "satmps/models/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satmps::models {
namespace {

double log_pmf(double lambda, double k) { return -lambda + k * std::log(lambda) - std::lgamma(k + 1.0); }

}  // namespace

double poisson_log1p_mean(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("Poisson rate must be non-negative");
  if (lambda == 0.0) return 0.0;
  if (lambda <= 1e4) {
    // Sum outward from the mode; stop once terms drop below 1e-16 of the sum.
    const double mode = std::floor(lambda);
    double sum = 0.0;
    for (double k = mode;; k += 1.0) {
      const double term = std::exp(log_pmf(lambda, k)) * std::log1p(k);
      sum += term;
      if (k > lambda && term < 1e-16 * sum) break;
    }
    for (double k = mode - 1.0; k >= 1.0; k -= 1.0) {
      const double term = std::exp(log_pmf(lambda, k)) * std::log1p(k);
      sum += term;
      if (term < 1e-16 * sum) break;
    }
    return sum;
  }
  // X ~ N(lambda, lambda): Simpson's rule over +-12 standard deviations.
  const int steps = 4000;
  const double lo = -12.0, hi = 12.0, h = (hi - lo) / steps;
  const double sd = std::sqrt(lambda);
  double acc = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double z = lo + i * h;
    const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double x = std::max(0.0, lambda + sd * z);
    acc += w * std::log1p(x) * std::exp(-0.5 * z * z);
  }
  return acc * h / 3.0 / std::sqrt(2.0 * std::numbers::pi);
}

DiagonalModelEntropy diagonal_model_entropy(const DiagonalModelParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be positive");
  if (!(params.f >= 0.0 && params.f <= 1.0)) throw std::invalid_argument("filling fraction must be in [0, 1]");
  const double n = params.n;
  const double ln_f = params.f * n * std::numbers::ln2;
  const double lambda = std::exp2((params.f - 0.5) * n);
  DiagonalModelEntropy out;
  out.mean = ln_f - poisson_log1p_mean(lambda);
  out.lower = ln_f - std::log1p(lambda);
  out.upper = std::min(params.f, 0.5) * n * std::numbers::ln2;
  return out;
}

}  // namespace satmps::models
