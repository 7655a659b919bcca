#pragma once

namespace satmps::models {

struct DiagonalModelParams {
  int n = 0;
  double f = 0.0;  // filling fraction: F = 2^{f n} unit amplitudes
};

struct DiagonalModelEntropy {
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Poisson model of the entanglement of a random 0/1 state with F ones:
// mean = ln F + E[-ln(X + 1)] with X ~ Poisson(lambda), lambda = 2^{(f-1/2) n}.
// Bounds in nats: lower = f n ln2 - ln(1 + lambda) (Jensen), upper = min(f, 1/2) n ln 2.
DiagonalModelEntropy diagonal_model_entropy(const DiagonalModelParams& params);

// E[ln(X + 1)] for X ~ Poisson(lambda). Series to machine precision for
// lambda <= 1e4, normal-approximation quadrature above.
double poisson_log1p_mean(double lambda);

}  // namespace satmps::models
