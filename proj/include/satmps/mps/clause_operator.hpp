#pragma once

#include <array>
#include <vector>

#include "satmps/mps/mps.hpp"
#include "satmps/sat/cnf.hpp"

namespace satmps::mps {

// Diagonal three-site operator 1 + (w - 1) h_j, where h_j projects onto the
// single violating assignment of the clause. w = exp(-dtau) for an imaginary
// time step, w = 0 for the satisfiability projector.
class ClauseOperator {
 public:
  static ClauseOperator imaginary_time(const sat::Clause& clause, double dtau);  // dtau = +inf -> projector
  static ClauseOperator projector(const sat::Clause& clause);
  // First-order gate 1 - dtau h_j (clamped at 0), used to study splitting error.
  static ClauseOperator linearized(const sat::Clause& clause, double dtau);
  static ClauseOperator with_weight(const sat::Clause& clause, double violating_weight);

  // 0-based sites, ascending, and the value each takes in the violating pattern.
  const std::array<int, 3>& sites() const noexcept { return sites_; }
  const std::array<int, 3>& violating_values() const noexcept { return violating_; }
  double violating_weight() const noexcept { return weight_; }
  int span_begin() const noexcept { return sites_[0]; }
  int span_end() const noexcept { return sites_[2]; }
  bool is_identity() const noexcept { return weight_ == 1.0; }

  // Entries over (s_a, s_b, s_c), s_a most significant.
  std::array<double, 8> diagonal() const;

  // Bond-dimension-2 MPO over sites span_begin()..span_end(). Element k holds
  // W[s] (left channels x right channels) for site span_begin()+k; the ends
  // are 1x2 and 2x1. Channel 1 carries "every involved literal so far is false".
  std::vector<SiteTensor> mpo() const;

 private:
  ClauseOperator(const sat::Clause& clause, double weight);

  std::array<int, 3> sites_{};
  std::array<int, 3> violating_{};
  double weight_ = 1.0;
};

// Contracts the MPO into the span, re-canonicalizes with a left-to-right QR
// pass and truncates with a right-to-left SVD pass; the center ends at
// span_begin(). The norm change goes into log_norm (reset to 0 afterwards if
// policy.renormalize). Throws NormUnderflow when the state is annihilated.
TruncationStats apply_clause(Mps& state, const ClauseOperator& op, const TruncationPolicy& policy);
Mps applied(Mps state, const ClauseOperator& op, const TruncationPolicy& policy);

}  // namespace satmps::mps
