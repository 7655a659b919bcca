#pragma once

namespace satmps::models {

// Entropy of the weights P(v) e^{-v tau}, v = 0..m, normalized, where P is
// Binomial(m, 1/8): the Schmidt spectrum of a state whose Schmidt vectors
// group basis states by their number of violated clauses.
double grouped_violation_entropy(int n, int m, double tau);

struct TauHat {
  double tau = 0.0;
  double entropy = 0.0;
  bool interior = false;  // false if the maximum sits on the search boundary
};

// argmax over tau in [1e-3, 1e3]: coarse log grid, then golden-section search
// on the bracketing cell down to 1e-6 in tau.
TauHat find_tau_hat(int n, int m);

}  // namespace satmps::models
