#include "satmps/models/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satmps::models {

double critical_alpha_star(int k) {
  if (k < 2 || k > 60) throw std::invalid_argument("k must be in [2, 60]");
  double sum = 0.0;
  double binom = 1.0;  // C(k, i)
  for (int i = 0; i < k; ++i) {
    const double p = binom / std::ldexp(1.0, k);
    const double q = std::ldexp(1.0, -i);
    const double f = 1.0 - std::ldexp(1.0, i - k);
    sum += q * p * std::log(f);
    binom = binom * (k - i) / (i + 1);
  }
  return -std::numbers::ln2 / (2.0 * sum);
}

double alpha_for_filling(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("filling fraction must be in [0, 1]");
  return (f - 1.0) * std::numbers::ln2 / std::log(7.0 / 8.0);
}

double alpha_sharp() { return alpha_for_filling(0.5); }

InitialSchmidt initial_schmidt_constants() {
  const double r37 = std::sqrt(37.0);
  InitialSchmidt c;
  c.a = std::sqrt((7.0 - r37) / 2.0);
  c.b = std::sqrt((7.0 + r37) / 2.0);
  // Right singular vector of the core for A: eigenvector of M^T M = [[6, sqrt3],
  // [sqrt3, 1]] with eigenvalue A^2; the left one follows from M v = A u.
  const double s3 = std::sqrt(3.0);
  double v0 = s3, v1 = c.a * c.a - 6.0;
  const double vn = std::hypot(v0, v1);
  v0 /= vn;
  v1 /= vn;
  const double u0 = (s3 * v0) / c.a;
  const double u1 = (s3 * v0 + v1) / c.a;
  c.theta = std::atan2(u1, u0);
  c.phi = std::atan2(v1, v0);
  return c;
}

double initial_schmidt_slope(int n, int cut) {
  if (n < 3 || cut < 1 || cut > n - 1) throw std::invalid_argument("need n >= 3 and 1 <= cut <= n-1");
  const double l = cut, r = n - cut, nn = n;
  const double p = (l * (l - 1) * (l - 2) + r * (r - 1) * (r - 2)) / (nn * (nn - 1) * (nn - 2));
  const auto c = initial_schmidt_constants();
  const double split = std::log(c.a * c.a / 8.0) + std::log(c.b * c.b / 8.0);
  return (p * std::log(7.0 / 8.0) + (1.0 - p) * split) / (p + 2.0 * (1.0 - p));
}

double late_slope(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in (0, 1]");
  return (1.0 - p) * std::log(std::sqrt(q));
}

ViolationCounts violation_counts_estimate(int n, int m) {
  const double n0 = std::pow(2.0, 0.5 * n) * std::pow(7.0 / 8.0, m);
  return ViolationCounts{n0, m / 7.0 * n0};
}

double reservoir_dimension(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1 and m >= 0");
  return std::pow(7.0 / 8.0, 0.5 * m) * std::pow(2.0, 0.5 * n);
}

}  // namespace satmps::models
