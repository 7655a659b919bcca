#pragma once

#include <cstdint>
#include <vector>

namespace satmps::models {

struct RowModelConfig {
  int n = 20;  // even; the row space holds the first n/2 variables
  int m = 0;
  int samples = 10000;
  bool corrections = true;
  std::uint64_t seed = 0;
};

// Statistics of ln(Omega) after m clauses, where Omega is the number of
// satisfying completions of one row. The unconditioned log-weight skips
// zero-factor events (a vanished row keeps the weight it had); the conditioned
// branch averages rows that never vanished.
struct RowModelPoint {
  int m = 0;
  double mean_log = 0.0;
  double sd_log = 0.0;
  double mean_log_alive = 0.0;
  double sd_log_alive = 0.0;
  double alive_fraction = 0.0;
  int alive = 0;
};

// Simulates `samples` independent rows through m clauses and reports one point
// per prefix 0..m. Per clause: draw the number i of clause variables in the row
// space (hypergeometric), let the clause act on the row with probability
// 2^-i, then scale Omega by 1 - 2^{i-3}; i = 3 removes the row. With
// corrections, clauses that repeat earlier variable combinations are
// neutralized or promoted to larger i.
std::vector<RowModelPoint> row_model_simulate(const RowModelConfig& config);

// C(n_row, i) C(n_col, k - i) / C(n_row + n_col, k)
double hypergeometric_pmf(int i, int n_row, int n_col, int k);
// C(k, i) / 2^k
double binomial_half_pmf(int i, int k);

// (n/2) ln 2 + m sum_{i<3} q_i p_i ln f_i with binomial or hypergeometric p_i.
double row_model_mean_log(int n, int m, bool hypergeometric);

}  // namespace satmps::models
