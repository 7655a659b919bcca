#include "satmps/mps/certificate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satmps::mps {
namespace {

// Transfer-matrix contraction of <net|Q|net> where Q restricts the listed sites
// to fixed values (value -1: unrestricted).
double restricted_norm(const Mps& state, const std::vector<int>& fixed) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Ones(1, 1);
  for (int k = 0; k < state.size(); ++k) {
    const auto& a = state.site(k);
    const int v = fixed[static_cast<std::size_t>(k)];
    if (v < 0) {
      e = a[0].transpose() * e * a[0] + a[1].transpose() * e * a[1];
    } else {
      const auto& s = a[static_cast<std::size_t>(v)];
      e = s.transpose() * e * s;
    }
  }
  return e(0, 0);
}

}  // namespace

double violation_weight(const Mps& state, const sat::Clause& clause) {
  if (clause.max_variable() > state.size()) throw std::invalid_argument("clause refers to a variable beyond n");
  std::vector<int> fixed(static_cast<std::size_t>(state.size()), -1);
  const double total = restricted_norm(state, fixed);
  if (!(total > 0.0)) return 0.0;
  for (const auto& l : clause.literals()) fixed[static_cast<std::size_t>(l.variable - 1)] = l.negated ? 1 : 0;
  return restricted_norm(state, fixed) / total;
}

Certificate verify_certificate(const Mps& state, const sat::CnfInstance& instance, double tolerance) {
  if (instance.n() != state.size()) throw std::invalid_argument("MPS length differs from the instance's n");
  Certificate cert;
  std::vector<int> fixed(static_cast<std::size_t>(state.size()), -1);
  const double net = restricted_norm(state, fixed);
  cert.count = std::exp(state.size() * std::numbers::ln2 + 2.0 * state.log_norm()) * net;
  cert.invariant = net > 0.0 && std::isfinite(net);
  for (int j = 0; j < instance.m(); ++j) {
    const double fid = 1.0 - violation_weight(state, instance.clause(j));
    if (fid < cert.min_fidelity) {
      cert.min_fidelity = fid;
      cert.worst_clause = j;
    }
  }
  cert.invariant = cert.invariant && cert.min_fidelity >= 1.0 - tolerance;
  return cert;
}

}  // namespace satmps::mps
