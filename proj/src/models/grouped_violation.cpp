#include "satmps/models/grouped_violation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace satmps::models {

double grouped_violation_entropy(int n, int m, double tau) {
  if (n < 1 || m < 0) throw std::invalid_argument("grouped violation model needs n >= 1 and m >= 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be non-negative");
  if (std::isinf(tau) || m == 0) return 0.0;
  const double lp = std::log(1.0 / 8.0), lq = std::log(7.0 / 8.0);
  std::vector<double> logw(static_cast<std::size_t>(m) + 1);
  double top = -std::numeric_limits<double>::infinity();
  for (int v = 0; v <= m; ++v) {
    const double lw = std::lgamma(m + 1.0) - std::lgamma(v + 1.0) - std::lgamma(m - v + 1.0) + v * lp +
                      (m - v) * lq - v * tau;
    logw[static_cast<std::size_t>(v)] = lw;
    top = std::max(top, lw);
  }
  double z = 0.0;
  for (double lw : logw) z += std::exp(lw - top);
  const double log_z = top + std::log(z);
  double s = 0.0;
  for (double lw : logw) {
    const double l = lw - log_z;
    s -= std::exp(l) * l;
  }
  return std::max(0.0, s);
}

TauHat find_tau_hat(int n, int m) {
  if (m < 1) throw std::invalid_argument("tau hat needs at least one clause");
  constexpr double lo = 1e-3, hi = 1e3;
  constexpr int grid = 121;
  auto s_at = [&](double log_tau) { return grouped_violation_entropy(n, m, std::exp(log_tau)); };
  const double a0 = std::log(lo), step = (std::log(hi) - a0) / (grid - 1);
  int best = 0;
  double best_s = -1.0;
  for (int k = 0; k < grid; ++k) {
    const double s = s_at(a0 + k * step);
    if (s > best_s) {
      best_s = s;
      best = k;
    }
  }
  double a = a0 + std::max(0, best - 1) * step;
  double b = a0 + std::min(grid - 1, best + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = s_at(x1), f2 = s_at(x2);
  while (std::exp(b) - std::exp(a) > 1e-6) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = s_at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = s_at(x2);
    }
  }
  TauHat out;
  out.tau = std::exp(0.5 * (a + b));
  out.entropy = s_at(0.5 * (a + b));
  // Compare against the boundary values: a maximum at the edge is not a bump.
  out.interior = best > 0 && best < grid - 1 && out.entropy > s_at(a0) && out.entropy > s_at(std::log(hi));
  if (!out.interior && best == 0) {
    out.tau = lo;
    out.entropy = s_at(a0);
  }
  return out;
}

}  // namespace satmps::models
