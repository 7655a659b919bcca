#pragma once

#include <vector>

namespace satmps::models {

// Expected number of vertices of each degree in the entanglement graph: one
// vertex per literal (2n), a clause adds a triangle, and a vertex can reach
// every other vertex except its own negation (max degree 2n - 2).
struct DegreeDistribution {
  int n = 0;
  std::vector<double> counts;  // counts[d], d = 0..2n-2

  static DegreeDistribution initial(int n);
  int max_degree() const noexcept { return 2 * n - 2; }
  double total() const;
  // sum_d d N_d; counts every edge twice.
  double degree_sum() const;
};

// Mean-field update for one added clause. A vertex is picked with probability
// 3/(2n); a picked vertex of degree d with dt = E - d free slots gains two,
// one or zero edges with weights dt(dt-1), 2 dt d, d(d-1).
DegreeDistribution markov_degree_step(const DegreeDistribution& dist);

// Chance that none of the active triangles repeats the variable set of an
// earlier one: N! / ((N - A)! N^m) with N = 8n(n-1)(n-2)/12 and
// A = active_edges / 3. Throws if A > N.
double triangle_correction(int n, double active_edges, int m);

struct ReservoirState {
  int m = 0;
  double correlations = 0.0;  // C_m
  double ln_dim = 0.0;        // ln dim L_m, floored at 0
  double entropy = 0.0;       // C_m ln dim L_m
  double active_edges = 0.0;
  double triangle_factor = 1.0;
};

struct ReservoirCurve {
  int n = 0;
  std::vector<ReservoirState> states;  // m = 0..m_max
  double alpha_hat = 0.0;
  double s_hat = 0.0;
  int m_hat = 0;
};

ReservoirCurve model_entropy_curve(int n, int m_max);

}  // namespace satmps::models
