#include "satmps/mps/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satmps/sat/counting.hpp"

namespace satmps::mps {
namespace {

// Sum of squared network amplitudes over sorted indices, sharing prefixes.
double prefix_weight(const Mps& state, const std::vector<std::uint64_t>& idx, std::size_t lo, std::size_t hi, int site,
                     const Eigen::RowVectorXd& v) {
  const int n = state.size();
  if (lo == hi) return 0.0;
  if (site == n) return v(0) * v(0) * static_cast<double>(hi - lo);
  const std::uint64_t bit = std::uint64_t{1} << (n - 1 - site);
  const auto split = static_cast<std::size_t>(
      std::partition_point(idx.begin() + static_cast<std::ptrdiff_t>(lo), idx.begin() + static_cast<std::ptrdiff_t>(hi),
                           [bit](std::uint64_t x) { return (x & bit) == 0; }) -
      idx.begin());
  double w = 0.0;
  if (split > lo) w += prefix_weight(state, idx, lo, split, site + 1, v * state.site(site)[0]);
  if (hi > split) w += prefix_weight(state, idx, split, hi, site + 1, v * state.site(site)[1]);
  return w;
}

struct SolutionTracker {
  bool trivial = false;
  std::optional<std::vector<std::uint64_t>> solutions;
};

SolutionTracker prepare_solutions(const sat::CnfInstance& instance, const RunOptions& options) {
  SolutionTracker t;
  if (!options.track_solution_weight) return t;
  if (instance.m() == 0) {
    t.trivial = true;
    return t;
  }
  if (instance.n() <= 63) {
    try {
      t.solutions = sat::enumerate_solutions(instance, options.solution_cap);
    } catch (const sat::CountLimitExceeded&) {
    }
  }
  return t;
}

double tracked_weight(const Mps& state, const sat::CnfInstance& instance, const SolutionTracker& tracker,
                      const TruncationPolicy& policy, const RunOptions& options) {
  if (!options.track_solution_weight) return 0.0;
  if (tracker.trivial) return 1.0;
  if (tracker.solutions) return weight_on(state, *tracker.solutions);
  return solution_weight(state, instance, policy, 0);
}

void fill_record(TraceRecord& rec, Mps& state, int cut, bool all_bonds) {
  if (all_bonds) {
    rec.bond_entropies = state.bond_entropies();
  }
  rec.schmidt = state.schmidt_values(cut);
  rec.entropy = entropy_from_schmidt(rec.schmidt);
  rec.max_bond = state.max_bond_dimension();
}

}  // namespace

int default_cut(int n) noexcept { return std::max(1, n / 2); }

double solution_count_estimate(const Mps& state) {
  return std::exp(state.size() * std::numbers::ln2 + 2.0 * state.log_norm());
}

double weight_on(const Mps& state, const std::vector<std::uint64_t>& sorted_indices) {
  if (state.size() > 63) throw std::invalid_argument("weight_on needs n <= 63");
  const double w = prefix_weight(state, sorted_indices, 0, sorted_indices.size(), 0, Eigen::RowVectorXd::Ones(1));
  // The network is unit-norm up to rounding; divide it out to be safe.
  const double nrm = overlap(state, state) / state.norm_squared();
  return w / nrm;
}

double solution_weight(const Mps& state, const sat::CnfInstance& instance, const TruncationPolicy& policy,
                       std::size_t cap) {
  if (instance.m() == 0) return 1.0;
  if (cap > 0 && instance.n() <= 63) {
    try {
      return weight_on(state, sat::enumerate_solutions(instance, cap));
    } catch (const sat::CountLimitExceeded&) {
    }
  }
  Mps copy = state;
  copy.set_log_norm(0.0);
  TruncationPolicy p = policy;
  p.renormalize = false;
  try {
    for (const auto& c : instance.clauses()) apply_clause(copy, ClauseOperator::projector(c), p);
  } catch (const NormUnderflow&) {
    return 0.0;
  }
  return copy.norm_squared();
}

EvolutionTrace ite_run(const sat::CnfInstance& instance, const ImaginaryTimeSchedule& schedule,
                       const TruncationPolicy& policy, const RunOptions& options) {
  if (!(schedule.dtau > 0.0)) throw std::invalid_argument("dtau must be positive");
  if (!(schedule.tau_max >= 0.0)) throw std::invalid_argument("tau_max must be non-negative");
  if (schedule.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
  const int n = instance.n();
  const int cut = options.cut < 0 ? default_cut(n) : options.cut;
  if (n < 2 || cut < 1 || cut >= n) throw std::invalid_argument("ite_run needs n >= 2 and 1 <= cut <= n-1");

  const auto tracker = prepare_solutions(instance, options);
  std::vector<ClauseOperator> gates;
  gates.reserve(instance.clauses().size());
  for (const auto& c : instance.clauses())
    gates.push_back(schedule.gate == GateKind::exact ? ClauseOperator::imaginary_time(c, schedule.dtau)
                                                     : ClauseOperator::linearized(c, schedule.dtau));

  TruncationPolicy gate_policy = policy;
  gate_policy.renormalize = false;

  EvolutionTrace trace;
  trace.n = n;
  trace.cut = cut;
  Mps state = Mps::product_plus(n);
  double log_total = 0.0;
  TruncationStats since_record;

  auto record = [&](double t) {
    TraceRecord rec;
    rec.t = t;
    fill_record(rec, state, cut, options.all_bonds);
    rec.norm_squared = std::exp(2.0 * (log_total + state.log_norm()));
    rec.solution_weight = tracked_weight(state, instance, tracker, policy, options);
    rec.discarded_weight = since_record.discarded_weight;
    trace.records.push_back(std::move(rec));
    since_record = TruncationStats{};
  };

  record(0.0);
  const long steps = std::max(1L, std::lround(schedule.tau_max / schedule.dtau));
  for (long step = 1; step <= steps; ++step) {
    for (const auto& g : gates) {
      auto st = apply_clause(state, g, gate_policy);
      since_record.merge(st);
      trace.truncation.merge(st);
    }
    if (policy.renormalize) {
      log_total += state.log_norm();
      state.set_log_norm(0.0);
    }
    if (step % schedule.record_every == 0 || step == steps) record(static_cast<double>(step) * schedule.dtau);
  }
  return trace;
}

Mps ite_state(const sat::CnfInstance& instance, double tau, const TruncationPolicy& policy) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be non-negative");
  TruncationPolicy p = policy;
  p.renormalize = true;
  Mps state = Mps::product_plus(instance.n());
  if (tau == 0.0) return state;
  for (const auto& c : instance.clauses()) apply_clause(state, ClauseOperator::imaginary_time(c, tau), p);
  state.set_log_norm(0.0);
  return state;
}

FlatRunResult flat_run(const sat::CnfInstance& instance, const TruncationPolicy& policy, const RunOptions& options) {
  const int n = instance.n();
  const int cut = options.cut < 0 ? default_cut(n) : options.cut;
  if (n < 2 || cut < 1 || cut >= n) throw std::invalid_argument("flat_run needs n >= 2 and 1 <= cut <= n-1");
  TruncationPolicy p = policy;
  p.renormalize = false;

  FlatRunResult out{EvolutionTrace{n, cut, {}, {}}, Mps::product_plus(n), false};
  out.trace.records.reserve(static_cast<std::size_t>(instance.m()));
  for (int j = 0; j < instance.m(); ++j) {
    TraceRecord rec;
    rec.t = j + 1;
    if (!out.vanished) {
      try {
        auto st = apply_clause(out.state, ClauseOperator::projector(instance.clause(j)), p);
        out.trace.truncation.merge(st);
        rec.discarded_weight = st.discarded_weight;
      } catch (const NormUnderflow&) {
        out.vanished = true;
      }
    }
    if (out.vanished) {
      rec.norm_squared = 0.0;
      rec.solution_weight = 0.0;
    } else {
      fill_record(rec, out.state, cut, options.all_bonds);
      rec.norm_squared = out.state.norm_squared();
      // Every surviving amplitude of the projected prefix is a prefix solution.
      rec.solution_weight = 1.0;
    }
    out.trace.records.push_back(std::move(rec));
  }
  return out;
}

BumpSummary summarize_bump(const EvolutionTrace& trace) {
  BumpSummary b;
  const auto& r = trace.records;
  if (r.empty()) return b;
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i].entropy > r[best].entropy) best = i;
  b.peak_index = static_cast<int>(best);
  b.peak_entropy = r[best].entropy;
  b.peak_time = r[best].t;
  b.interior = best > 0 && best + 1 < r.size();
  if (b.interior) {
    // Vertex of the parabola through the maximum and its neighbours.
    const double t0 = r[best - 1].t, t1 = r[best].t, t2 = r[best + 1].t;
    const double s0 = r[best - 1].entropy, s1 = r[best].entropy, s2 = r[best + 1].entropy;
    const double d01 = (s1 - s0) / (t1 - t0);
    const double d12 = (s2 - s1) / (t2 - t1);
    const double curv = (d12 - d01) / (t2 - t0);
    if (curv < 0.0) {
      // Newton form s(t) = s0 + d01 (t - t0) + curv (t - t0)(t - t1).
      const double vertex = 0.5 * (t0 + t1) - d01 / (2.0 * curv);
      b.peak_time = std::clamp(vertex, t0, t2);
      b.peak_entropy =
          std::max(s1, s0 + d01 * (b.peak_time - t0) + curv * (b.peak_time - t0) * (b.peak_time - t1));
    }
  }
  return b;
}

}  // namespace satmps::mps
