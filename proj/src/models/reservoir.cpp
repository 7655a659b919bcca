#include "satmps/models/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "satmps/models/constants.hpp"

namespace satmps::models {

DegreeDistribution DegreeDistribution::initial(int n) {
  if (n < 2) throw std::invalid_argument("degree model needs n >= 2");
  DegreeDistribution d;
  d.n = n;
  d.counts.assign(static_cast<std::size_t>(2 * n - 1), 0.0);
  d.counts[0] = 2.0 * n;
  return d;
}

double DegreeDistribution::total() const { return std::accumulate(counts.begin(), counts.end(), 0.0); }

double DegreeDistribution::degree_sum() const {
  double s = 0.0;
  for (std::size_t d = 0; d < counts.size(); ++d) s += static_cast<double>(d) * counts[d];
  return s;
}

DegreeDistribution markov_degree_step(const DegreeDistribution& dist) {
  const int e = dist.max_degree();
  if (static_cast<int>(dist.counts.size()) != e + 1) throw std::invalid_argument("degree histogram has the wrong length");
  const double ps = 3.0 / (2.0 * dist.n);
  DegreeDistribution next{dist.n, std::vector<double>(dist.counts.size(), 0.0)};
  for (int d = 0; d <= e; ++d) {
    const double nd = dist.counts[static_cast<std::size_t>(d)];
    if (nd == 0.0) continue;
    const double dt = e - d;
    const double w[3] = {std::max(0.0, static_cast<double>(d) * (d - 1)), std::max(0.0, 2.0 * dt * d),
                         std::max(0.0, dt * (dt - 1.0))};
    const double sum = w[0] + w[1] + w[2];
    next.counts[static_cast<std::size_t>(d)] += (1.0 - ps) * nd;
    if (sum == 0.0) {
      next.counts[static_cast<std::size_t>(d)] += ps * nd;
      continue;
    }
    for (int i = 0; i < 3; ++i)
      if (w[i] > 0.0) next.counts[static_cast<std::size_t>(d + i)] += ps * (w[i] / sum) * nd;
  }
  return next;
}

double triangle_correction(int n, double active_edges, int m) {
  if (n < 3) throw std::invalid_argument("triangle correction needs n >= 3");
  if (active_edges < 0.0 || m < 0) throw std::invalid_argument("negative edge or clause count");
  const double big_n = 8.0 * n * (n - 1.0) * (n - 2.0) / 12.0;
  const double a = active_edges / 3.0;
  if (a > big_n) throw std::domain_error("more active triangles than distinct clauses");
  return std::exp(std::lgamma(big_n + 1.0) - std::lgamma(big_n - a + 1.0) - m * std::log(big_n));
}

ReservoirCurve model_entropy_curve(int n, int m_max) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("reservoir model needs even n >= 4");
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
  const double n_tot = 2.0 * n * (2.0 * n - 2.0) / 2.0;
  const double n_cut = n_tot - 2.0 * n * (n - 2.0);
  ReservoirCurve curve;
  curve.n = n;
  DegreeDistribution dist = DegreeDistribution::initial(n);
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) dist = markov_degree_step(dist);
    ReservoirState s;
    s.m = m;
    const double degree_sum = dist.degree_sum();
    s.active_edges = degree_sum / 2.0;
    s.triangle_factor = triangle_correction(n, s.active_edges, m);
    s.correlations = 0.5 * (degree_sum / n_tot) * (n_cut / n_tot) * s.triangle_factor;
    s.ln_dim = std::max(0.0, std::log(reservoir_dimension(n, m)));
    s.entropy = s.correlations * s.ln_dim;
    if (s.entropy > curve.s_hat) {
      curve.s_hat = s.entropy;
      curve.m_hat = m;
    }
    curve.states.push_back(s);
  }
  curve.alpha_hat = static_cast<double>(curve.m_hat) / n;
  return curve;
}

}  // namespace satmps::models
