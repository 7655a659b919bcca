#pragma once

#include <span>

namespace satmps::harness {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares y = slope x + intercept; needs two distinct x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> x);
// Sample standard deviation (n - 1); 0 for fewer than two values.
double sample_sd(std::span<const double> x);
double standard_error(std::span<const double> x);

}  // namespace satmps::harness
