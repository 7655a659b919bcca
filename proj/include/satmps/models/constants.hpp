#pragma once

namespace satmps::models {

// Clause density where the typical row's expected log solution count crosses
// zero, with binomial p_i = C(k,i)/2^k, q_i = 2^-i, f_i = 1 - 2^{i-k}:
// alpha* = -ln 2 / (2 sum_{i<k} q_i p_i ln f_i).
double critical_alpha_star(int k = 3);

// Clause density at filling f, from (f - 1) ln 2 = alpha ln(7/8).
double alpha_for_filling(double f);
// alpha_for_filling(1/2) = (ln 2 / 2) / ln(8/7).
double alpha_sharp();

// Singular-value decomposition of the 7-of-8 three-qubit state, split one
// qubit versus two: the 2x2 core [[sqrt3, 0], [sqrt3, 1]] in the basis
// {|x> = (|01>+|10>+|11>)/sqrt3, |00>} has singular values A < B, and
//   A cos(theta) cos(phi) + B sin(theta) sin(phi) = sqrt3
//   A sin(theta) cos(phi) - B cos(theta) sin(phi) = sqrt3
//   A cos(theta) sin(phi) - B sin(theta) cos(phi) = 0
//   A sin(theta) sin(phi) + B cos(theta) cos(phi) = 1
struct InitialSchmidt {
  double a = 0.0;
  double b = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};
InitialSchmidt initial_schmidt_constants();

// Early-clause slope of the mean log squared Schmidt value at cut l of n:
// p is the chance a clause sits entirely on one side.
double initial_schmidt_slope(int n, int cut);

// (1 - p) ln sqrt(q)
double late_slope(double p, double q);

struct ViolationCounts {
  double n0 = 0.0;  // expected zero-violation entries per row, sqrt(2^n) (7/8)^m
  double n1 = 0.0;  // expected single-violation entries per row, (m/7) n0
};
ViolationCounts violation_counts_estimate(int n, int m);

// (7/8)^{m/2} 2^{n/2}
double reservoir_dimension(int n, int m);

}  // namespace satmps::models
