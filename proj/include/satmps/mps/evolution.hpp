#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satmps/mps/clause_operator.hpp"
#include "satmps/mps/mps.hpp"
#include "satmps/sat/cnf.hpp"

namespace satmps::mps {

enum class GateKind {
  exact,       // exp(-dtau h_j); the clause product is then exact per step
  linearized,  // 1 - dtau h_j; first-order in dtau, for error-scaling studies
};

struct ImaginaryTimeSchedule {
  double dtau = 0.05;
  double tau_max = 12.0;
  int record_every = 1;  // in steps
  GateKind gate = GateKind::exact;
};

struct RunOptions {
  int cut = -1;  // -1: floor(n/2)
  bool all_bonds = true;
  bool track_solution_weight = true;
  // Solutions are enumerated up to this many; beyond it the weight is computed
  // by projecting a copy of the state.
  std::size_t solution_cap = std::size_t{1} << 14;
};

struct TraceRecord {
  double t = 0.0;  // tau, or number of clauses applied
  double entropy = 0.0;  // at the trace cut
  std::vector<double> schmidt;  // at the trace cut
  std::vector<double> bond_entropies;  // bonds 1..n-1; empty unless requested
  double norm_squared = 1.0;  // of the unrenormalized evolution
  double solution_weight = 0.0;
  int max_bond = 1;
  double discarded_weight = 0.0;  // since the previous record
};

struct EvolutionTrace {
  int n = 0;
  int cut = 0;
  std::vector<TraceRecord> records;
  TruncationStats truncation;
};

struct BumpSummary {
  double peak_entropy = 0.0;
  double peak_time = 0.0;  // parabolic refinement around the grid maximum
  int peak_index = 0;
  bool interior = false;
};

int default_cut(int n) noexcept;

// Imaginary-time evolution from |+...+>: every step applies exp(-dtau h_j) for
// j in instance order; records at tau = 0 and every record_every steps.
EvolutionTrace ite_run(const sat::CnfInstance& instance, const ImaginaryTimeSchedule& schedule,
                       const TruncationPolicy& policy, const RunOptions& options = {});

// e^{-tau H}|+...+>, normalized. The clause terms commute, so one exact gate
// exp(-tau h_j) per clause gives the state without time stepping.
Mps ite_state(const sat::CnfInstance& instance, double tau, const TruncationPolicy& policy);

struct FlatRunResult {
  EvolutionTrace trace;  // one record per clause
  Mps state;
  bool vanished = false;  // UNSAT detected; later records carry norm 0
};

// Clause projectors in instance order, norm carried in log_norm.
FlatRunResult flat_run(const sat::CnfInstance& instance, const TruncationPolicy& policy, const RunOptions& options = {});

// 2^n times the squared norm.
double solution_count_estimate(const Mps& state);

// Weight of the normalized state on the given sorted basis indices.
double weight_on(const Mps& state, const std::vector<std::uint64_t>& sorted_indices);
// Weight on satisfying assignments: enumerates solutions when there are at most
// `cap` of them, otherwise projects a copy (with truncation per policy).
double solution_weight(const Mps& state, const sat::CnfInstance& instance, const TruncationPolicy& policy,
                       std::size_t cap = std::size_t{1} << 14);

BumpSummary summarize_bump(const EvolutionTrace& trace);

}  // namespace satmps::mps
