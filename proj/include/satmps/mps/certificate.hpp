#pragma once

#include "satmps/mps/mps.hpp"
#include "satmps/sat/cnf.hpp"

namespace satmps::mps {

struct Certificate {
  bool invariant = false;
  double count = 0.0;         // 2^n times the squared norm
  double min_fidelity = 1.0;  // min_j <psi|P_j|psi> / <psi|psi>
  int worst_clause = -1;
};

// <psi|h|psi> / <psi|psi> for the violating pattern of one clause.
double violation_weight(const Mps& state, const sat::Clause& clause);

// Checks that every clause projector leaves the state unchanged (fidelity
// >= 1 - tolerance) and reports the implied solution count.
Certificate verify_certificate(const Mps& state, const sat::CnfInstance& instance, double tolerance = 1e-9);

}  // namespace satmps::mps
