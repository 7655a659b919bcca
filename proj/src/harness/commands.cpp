#include "satmps/harness/commands.hpp"

#include <atomic>
#include <cmath>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <thread>

#include "json.hpp"
#include "satmps/dense/state.hpp"
#include "satmps/harness/csv.hpp"
#include "satmps/magic/stabilizer.hpp"
#include "satmps/models/constants.hpp"
#include "satmps/models/diagonal.hpp"
#include "satmps/models/grouped_violation.hpp"
#include "satmps/models/random_states.hpp"
#include "satmps/models/reservoir.hpp"
#include "satmps/models/row_model.hpp"
#include "satmps/models/row_statistics.hpp"
#include "satmps/mps/certificate.hpp"
#include "satmps/mps/evolution.hpp"
#include "satmps/mps/snapshot.hpp"
#include "satmps/sat/counting.hpp"
#include "satmps/sat/dimacs.hpp"
#include "satmps/sat/generate.hpp"

namespace satmps::harness {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceSpec {
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  int index = 0;
  std::uint64_t seed = 0;
};

std::vector<InstanceSpec> sweep(const ExperimentConfig& c) {
  std::vector<InstanceSpec> out;
  if (!c.instance_file.empty()) {
    const auto inst = sat::read_dimacs_file(c.instance_file);
    out.push_back({inst.n(), inst.m(), inst.alpha(), 0, 0});
    return out;
  }
  for (int n : c.n)
    for (double a : c.alpha) {
      const int m = sat::clauses_for_alpha(n, a);
      for (int k = 0; k < c.instances; ++k)
        out.push_back({n, m, static_cast<double>(m) / n, k, instance_seed(c.seed, n, m, k)});
    }
  return out;
}

sat::CnfInstance make_instance(const ExperimentConfig& c, const InstanceSpec& s) {
  if (!c.instance_file.empty()) return sat::read_dimacs_file(c.instance_file);
  if (c.ensemble == "random") return sat::random_instance(s.n, s.m, s.seed);
  if (c.ensemble == "unique") return sat::unique_solution_filter(s.n, s.m, s.seed, c.rejection_budget);
  return sat::generate_satisfiable(s.n, s.m, s.seed, c.rejection_budget);
}

Row spec_cells(const InstanceSpec& s) {
  return {cell(static_cast<unsigned long long>(s.seed)), cell(s.n), cell(s.m), cell(s.alpha), cell(s.index)};
}

Row concat(Row a, const Row& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Runs fn(i) for i < count on up to `workers` threads. The first exception by
// index is rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t count, int workers, F&& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, count); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> header_comments(const ExperimentConfig& c, std::string_view command) {
  if (!c.timestamp) return {};
  return {"satmps " + std::string(command) + " " + utc_now()};
}

void emit(const ExperimentConfig& c, std::string_view command, const CsvTable& table) {
  const auto comments = header_comments(c, command);
  if (c.out == "-") {
    table.write(std::cout, comments);
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  table.write(f, comments);
}

void emit_to_dir(const ExperimentConfig& c, std::string_view command, const std::string& name, const CsvTable& table) {
  const auto comments = header_comments(c, command);
  if (c.out == "-") {
    std::cout << "# report " << name << '\n';
    table.write(std::cout, comments);
    std::cout << '\n';
    return;
  }
  fs::create_directories(c.out);
  std::ofstream f(fs::path(c.out) / (name + ".csv"), std::ios::binary);
  if (!f) throw UsageError("cannot write into " + c.out);
  table.write(f, comments);
}

mps::TruncationPolicy policy_of(const ExperimentConfig& c) {
  mps::TruncationPolicy p;
  p.max_bond = c.max_bond;
  p.cutoff = c.cutoff;
  return p;
}

std::string instance_stem(const InstanceSpec& s) {
  return "n" + std::to_string(s.n) + "_m" + std::to_string(s.m) + "_i" + std::to_string(s.index);
}

int cut_for(const ExperimentConfig& c, int n) { return c.cut < 0 ? mps::default_cut(n) : c.cut; }

// Time grid of ite_run: 0, every record_every steps, and the last step.
std::vector<double> ite_grid(const ExperimentConfig& c) {
  std::vector<double> t{0.0};
  const long steps = std::max(1L, std::lround(c.tau_max / c.dtau));
  for (long s = 1; s <= steps; ++s)
    if (s % c.record_every == 0 || s == steps) t.push_back(static_cast<double>(s) * c.dtau);
  return t;
}

mps::EvolutionTrace dense_trace(const sat::CnfInstance& inst, const std::vector<double>& grid, int cut) {
  const auto diag = dense::build_energy_diagonal(inst);
  mps::EvolutionTrace trace;
  trace.n = inst.n();
  trace.cut = cut;
  const double dim = std::exp2(inst.n());
  for (double t : grid) {
    const auto state = dense::ite_evolve(diag, t);
    const auto spec = dense::schmidt(state, cut);
    mps::TraceRecord r;
    r.t = t;
    r.entropy = dense::entanglement_entropy(spec);
    r.solution_weight = dense::solution_weight(state, diag);
    double z = 0.0;
    for (auto e : diag.values()) z += std::exp(-2.0 * t * e);
    r.norm_squared = z / dim;
    r.max_bond = static_cast<int>(spec.values.size());
    trace.records.push_back(std::move(r));
  }
  return trace;
}

struct JobOutput {
  std::vector<Row> rows;
  bool failed = false;
  std::string diagnostic;
};

int finish(const std::vector<JobOutput>& jobs) {
  bool failed = false;
  for (const auto& j : jobs)
    if (j.failed) {
      failed = true;
      std::cerr << "satmps: " << j.diagnostic << '\n';
    }
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int cmd_generate(const ExperimentConfig& c) {
  if (c.out == "-") throw UsageError("generate needs --out DIR");
  const auto specs = sweep(c);
  std::vector<nlohmann::json> entries(specs.size());
  std::vector<std::string> texts(specs.size());
  parallel_for(specs.size(), c.workers, [&](std::size_t i) {
    const auto& s = specs[i];
    const auto inst = make_instance(c, s);
    texts[i] = sat::to_dimacs(inst);
    nlohmann::json e{{"file", instance_stem(s) + ".cnf"}, {"n", s.n}, {"m", s.m}, {"alpha", s.alpha},
                     {"index", s.index}, {"seed", s.seed}};
    if (s.n <= sat::kDefaultExactCountLimit) e["solutions"] = sat::count_solutions(inst);
    entries[i] = std::move(e);
  });
  fs::create_directories(c.out);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::ofstream f(fs::path(c.out) / entries[i]["file"].get<std::string>(), std::ios::binary);
    f << texts[i];
  }
  nlohmann::json manifest{{"master_seed", c.seed}, {"ensemble", c.ensemble}, {"instances", entries}};
  std::ofstream(fs::path(c.out) / "manifest.json", std::ios::binary) << manifest.dump(2) << '\n';
  return kExitOk;
}

int cmd_evolve(const ExperimentConfig& c) {
  const auto specs = sweep(c);
  const auto grid = ite_grid(c);
  CsvTable table({"record", "seed", "n", "m", "alpha", "instance", "backend", "tau", "entropy", "solution_weight",
                  "norm_squared", "max_bond", "discarded_weight", "interior", "delta_entropy"});
  std::vector<JobOutput> jobs(specs.size());
  parallel_for(specs.size(), c.workers, [&](std::size_t i) {
    const auto& s = specs[i];
    const auto inst = make_instance(c, s);
    const int cut = cut_for(c, s.n);
    auto& out = jobs[i];
    auto add_trace = [&](const mps::EvolutionTrace& tr, const std::string& backend) {
      for (const auto& r : tr.records)
        out.rows.push_back(concat(concat({"trace"}, spec_cells(s)),
                                  {backend, cell(r.t), cell(r.entropy), cell(r.solution_weight), cell(r.norm_squared),
                                   cell(r.max_bond), cell(r.discarded_weight), "", ""}));
      const auto b = mps::summarize_bump(tr);
      const auto& last = tr.records.back();
      out.rows.push_back(concat(concat({"summary"}, spec_cells(s)),
                                {backend, cell(b.peak_time), cell(b.peak_entropy), cell(last.solution_weight),
                                 cell(last.norm_squared), cell(last.max_bond), cell(tr.truncation.discarded_weight),
                                 cell(b.interior), ""}));
    };
    std::optional<mps::EvolutionTrace> mps_tr, dense_tr;
    if (c.backend != "dense") {
      mps::ImaginaryTimeSchedule sched{c.dtau, c.tau_max, c.record_every, mps::GateKind::exact};
      mps::RunOptions opts;
      opts.cut = cut;
      opts.all_bonds = false;
      mps_tr = mps::ite_run(inst, sched, policy_of(c), opts);
      add_trace(*mps_tr, "mps");
    }
    if (c.backend == "dense" || (c.backend == "both" && s.n <= 12)) {
      dense_tr = dense_trace(inst, grid, cut);
      add_trace(*dense_tr, "dense");
    }
    if (mps_tr && dense_tr) {
      double delta = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k)
        delta = std::max(delta, std::abs(mps_tr->records[k].entropy - dense_tr->records[k].entropy));
      out.rows.push_back(concat(concat({"check"}, spec_cells(s)), {"both", "", "", "", "", "", "", "", cell(delta)}));
      if (!(delta <= c.cross_check_tolerance)) {
        out.failed = true;
        out.diagnostic = "evolve: backends differ by " + format_double(delta) + " on instance " + instance_stem(s);
      }
    }
  });
  for (const auto& j : jobs) table.append(j.rows);
  emit(c, "evolve", table);
  return finish(jobs);
}

int cmd_flat(const ExperimentConfig& c) {
  const auto specs = sweep(c);
  CsvTable table({"record", "seed", "n", "m", "alpha", "instance", "clauses", "entropy", "norm_squared", "count",
                  "max_bond", "discarded_weight", "exact_count", "invariant", "min_fidelity", "match"});
  std::vector<JobOutput> jobs(specs.size());
  if (!c.snapshot_dir.empty()) fs::create_directories(c.snapshot_dir);
  parallel_for(specs.size(), c.workers, [&](std::size_t i) {
    const auto& s = specs[i];
    const auto inst = make_instance(c, s);
    mps::RunOptions opts;
    opts.cut = cut_for(c, s.n);
    opts.all_bonds = false;
    const auto res = mps::flat_run(inst, policy_of(c), opts);
    auto& out = jobs[i];
    const double dim = std::exp2(s.n);
    for (const auto& r : res.trace.records)
      out.rows.push_back(concat(concat({"trace"}, spec_cells(s)),
                                {cell(static_cast<int>(r.t)), cell(r.entropy), cell(r.norm_squared),
                                 cell(dim * r.norm_squared), cell(r.max_bond), cell(r.discarded_weight), "", "", "",
                                 ""}));
    mps::Certificate cert;
    if (!res.vanished) cert = mps::verify_certificate(res.state, inst, c.tolerance);
    std::string exact_cell;
    bool match = cert.invariant;
    if (s.n <= sat::kDefaultExactCountLimit) {
      const auto exact = sat::count_solutions(inst);
      exact_cell = cell(static_cast<unsigned long long>(exact));
      match = res.vanished ? exact == 0 : cert.invariant && std::llround(cert.count) == static_cast<long long>(exact);
    }
    out.rows.push_back(concat(concat({"verdict"}, spec_cells(s)),
                              {cell(s.m), "", cell(res.vanished ? 0.0 : res.state.norm_squared()), cell(cert.count),
                               cell(res.vanished ? 0 : res.state.max_bond_dimension()),
                               cell(res.trace.truncation.discarded_weight), exact_cell, cell(cert.invariant),
                               cell(cert.min_fidelity), cell(match)}));
    const bool untruncated = !res.trace.truncation.hit_cap && res.trace.truncation.discarded_weight < 1e-12;
    if (untruncated && !match && !exact_cell.empty()) {
      out.failed = true;
      out.diagnostic = "flat: untruncated count disagrees with the exact count on instance " + instance_stem(s);
    }
    if (!c.snapshot_dir.empty() && !res.vanished) {
      mps::write_snapshot_file(fs::path(c.snapshot_dir) / (instance_stem(s) + ".mps"), res.state);
      sat::write_dimacs_file(fs::path(c.snapshot_dir) / (instance_stem(s) + ".cnf"), inst);
    }
  });
  for (const auto& j : jobs) table.append(j.rows);
  emit(c, "flat", table);
  return finish(jobs);
}

int cmd_magic(const ExperimentConfig& c) {
  const auto specs = sweep(c);
  CsvTable table({"seed", "n", "m", "alpha", "instance", "tau", "entropy", "m1", "m1_se", "m2", "m2_se", "m1_exact",
                  "m2_exact", "samples", "chain_length"});
  std::vector<JobOutput> jobs(specs.size());
  parallel_for(specs.size(), c.workers, [&](std::size_t i) {
    const auto& s = specs[i];
    const auto inst = make_instance(c, s);
    const int cut = cut_for(c, s.n);
    const bool exact = c.exact && s.n <= magic::kDefaultExactStabilizerLimit;
    std::optional<dense::EnergyDiagonal> diag;
    if (exact) diag = dense::build_energy_diagonal(inst);
    auto& out = jobs[i];
    for (std::size_t k = 0; k < c.tau.size(); ++k) {
      const double tau = c.tau[k];
      auto state = mps::ite_state(inst, tau, policy_of(c));
      const double entropy = s.n > 1 ? mps::entropy_from_schmidt(state.schmidt_values(cut)) : 0.0;
      const auto m1 = magic::sample_m1(state, c.pauli_samples, derive_seed(s.seed, streams::sampling, k));
      magic::MarkovOptions mo{c.chain_length, c.burn_in, c.batches};
      const auto m2 = magic::markov_m2(state, mo, derive_seed(s.seed, streams::markov, k));
      std::string e1, e2;
      if (exact) {
        const auto ex = magic::exact_stabilizer_entropies(dense::ite_evolve(*diag, tau));
        e1 = cell(ex.m1);
        e2 = cell(ex.m2);
        const bool ok1 = std::abs(m1.value - ex.m1) <= 5.0 * m1.standard_error + 1e-9;
        const bool ok2 = std::abs(m2.value - ex.m2) <= 5.0 * m2.standard_error + 1e-9;
        if (!ok1 || !ok2) {
          out.failed = true;
          out.diagnostic = "magic: sampled and exact entropies differ beyond 5 standard errors at tau=" +
                           format_double(tau) + " on instance " + instance_stem(s);
        }
      }
      out.rows.push_back(concat(spec_cells(s), {cell(tau), cell(entropy), cell(m1.value), cell(m1.standard_error),
                                                cell(m2.value), cell(m2.standard_error), e1, e2, cell(m1.samples),
                                                cell(m2.samples)}));
    }
  });
  for (const auto& j : jobs) table.append(j.rows);
  emit(c, "magic", table);
  return finish(jobs);
}

int cmd_verify(const ExperimentConfig& c) {
  if (c.mps_file.empty() || c.instance_file.empty()) throw UsageError("verify needs mps_file and instance_file");
  const auto state = mps::read_snapshot_file(c.mps_file);
  const auto inst = sat::read_dimacs_file(c.instance_file);
  if (state.size() != inst.n())
    throw UsageError("snapshot has " + std::to_string(state.size()) + " sites but the instance has n=" +
                     std::to_string(inst.n()));
  const auto cert = mps::verify_certificate(state, inst, c.tolerance);
  CsvTable table({"n", "m", "invariant", "count", "rounded_count", "min_fidelity", "worst_clause"});
  table.add({cell(inst.n()), cell(inst.m()), cell(cert.invariant), cell(cert.count), cell(std::llround(cert.count)),
             cell(cert.min_fidelity), cell(cert.worst_clause)});
  emit(c, "verify", table);
  return cert.invariant ? kExitOk : kExitCheckFailed;
}

int cmd_models(const ExperimentConfig& c) {
  for (const auto& report : c.reports) {
    if (report == "constants") {
      CsvTable t({"name", "value"});
      const auto k = models::initial_schmidt_constants();
      t.add({"alpha_star", cell(models::critical_alpha_star(3))});
      t.add({"alpha_sharp", cell(models::alpha_sharp())});
      t.add({"schmidt_a", cell(k.a)});
      t.add({"schmidt_b", cell(k.b)});
      for (int n : c.n)
        if (n >= 2) t.add({"initial_slope_n" + std::to_string(n), cell(models::initial_schmidt_slope(n, n / 2))});
      emit_to_dir(c, "models", report, t);
    } else if (report == "diagonal") {
      CsvTable t({"n", "f", "ones", "mean", "lower", "upper", "sample_mean", "sample_sd", "samples"});
      struct Cell {
        int n;
        double f;
      };
      std::vector<Cell> cells;
      for (int n : c.n)
        for (double f : c.filling) cells.push_back({n, f});
      std::vector<Row> rows(cells.size());
      parallel_for(cells.size(), c.workers, [&](std::size_t i) {
        const auto [n, f] = cells[i];
        const auto model = models::diagonal_model_entropy({n, f});
        const auto ones = models::filling_count(n, f);
        std::vector<double> xs;
        if (c.samples > 0 && n <= 24 && n >= 2)
          for (int k = 0; k < c.samples; ++k) {
            Rng rng(derive_seed(c.seed, streams::states, (static_cast<std::uint64_t>(i) << 32) | static_cast<unsigned>(k)));
            xs.push_back(models::sample_combinatorial_entropy(n, ones, n / 2, rng));
          }
        double mu = std::nan(""), sd = std::nan("");
        if (!xs.empty()) {
          mu = 0.0;
          for (double x : xs) mu += x;
          mu /= static_cast<double>(xs.size());
          sd = 0.0;
          for (double x : xs) sd += (x - mu) * (x - mu);
          sd = xs.size() > 1 ? std::sqrt(sd / static_cast<double>(xs.size() - 1)) : 0.0;
        }
        rows[i] = {cell(n), cell(f), cell(static_cast<unsigned long long>(ones)), cell(model.mean), cell(model.lower),
                   cell(model.upper), cell(mu), cell(sd), cell(static_cast<int>(xs.size()))};
      });
      t.append(rows);
      emit_to_dir(c, "models", report, t);
    } else if (report == "reservoir") {
      CsvTable t({"n", "m", "alpha", "correlations", "ln_dim", "entropy", "active_edges", "triangle_factor"});
      CsvTable peaks({"n", "m_hat", "alpha_hat", "s_hat", "s_hat_per_n"});
      for (int n : c.n) {
        const auto curve = models::model_entropy_curve(n, c.m_max < 0 ? 6 * n : c.m_max);
        for (const auto& s : curve.states)
          t.add({cell(n), cell(s.m), cell(static_cast<double>(s.m) / n), cell(s.correlations), cell(s.ln_dim),
                 cell(s.entropy), cell(s.active_edges), cell(s.triangle_factor)});
        peaks.add({cell(n), cell(curve.m_hat), cell(curve.alpha_hat), cell(curve.s_hat), cell(curve.s_hat / n)});
      }
      emit_to_dir(c, "models", report, t);
      emit_to_dir(c, "models", "reservoir_peaks", peaks);
    } else if (report == "row") {
      CsvTable t({"n", "corrections", "m", "alpha", "mean_log", "sd_log", "mean_log_alive", "sd_log_alive",
                  "alive_fraction", "closed_form"});
      for (int n : c.n)
        for (bool corr : {false, true}) {
          if (corr && !c.corrections) continue;
          models::RowModelConfig rc{n, c.m_max < 0 ? 5 * n : c.m_max, std::max(1, c.samples), corr, c.seed};
          for (const auto& p : models::row_model_simulate(rc))
            t.add({cell(n), cell(corr), cell(p.m), cell(static_cast<double>(p.m) / n), cell(p.mean_log), cell(p.sd_log),
                   cell(p.mean_log_alive), cell(p.sd_log_alive), cell(p.alive_fraction),
                   cell(models::row_model_mean_log(n, p.m, true))});
        }
      emit_to_dir(c, "models", report, t);
    } else if (report == "row_empirical") {
      CsvTable t({"n", "m", "alpha", "mean_log", "sd_log", "instances", "mean_log_alive", "sd_log_alive",
                  "rows_alive", "mean_row_count", "n0_estimate"});
      for (int n : c.n) {
        models::RowStatisticsConfig rc{n, c.m_max < 0 ? 5 * n : c.m_max, std::max(1, c.instances), c.seed};
        for (const auto& p : models::empirical_row_statistics(rc))
          t.add({cell(n), cell(p.m), cell(static_cast<double>(p.m) / n), cell(p.mean_log), cell(p.sd_log),
                 cell(p.instances), cell(p.mean_log_alive), cell(p.sd_log_alive),
                 cell(static_cast<unsigned long long>(p.rows_alive)), cell(p.zero_violation_mean),
                 cell(models::violation_counts_estimate(n, p.m).n0)});
      }
      emit_to_dir(c, "models", report, t);
    } else if (report == "grouped") {
      CsvTable t({"n", "alpha", "m", "tau_hat", "entropy", "interior"});
      for (int n : c.n)
        for (double a : c.alpha) {
          const int m = sat::clauses_for_alpha(n, a);
          if (m < 1) continue;
          const auto th = models::find_tau_hat(n, m);
          t.add({cell(n), cell(static_cast<double>(m) / n), cell(m), cell(th.tau), cell(th.entropy), cell(th.interior)});
        }
      emit_to_dir(c, "models", report, t);
    } else if (report == "overlay") {
      CsvTable t({"n", "m", "alpha", "model_entropy", "empirical_entropy", "empirical_se", "instances"});
      for (int n : c.n) {
        const int m_max = c.m_max < 0 ? sat::clauses_for_alpha(n, c.alpha.empty() ? 4.27 : c.alpha.front()) : c.m_max;
        const int count = std::max(1, c.instances);
        std::vector<std::vector<double>> curves(static_cast<std::size_t>(count));
        parallel_for(curves.size(), c.workers, [&](std::size_t k) {
          const auto inst = sat::generate_satisfiable(n, m_max, instance_seed(c.seed, n, m_max, static_cast<int>(k)),
                                                      c.rejection_budget);
          std::vector<double> s{0.0};
          if (n <= dense::kDefaultDenseLimit) {
            for (const auto& step : dense::flat_protocol_dense(inst, n / 2)) s.push_back(dense::entanglement_entropy(step.spectrum));
          } else {
            mps::RunOptions opts;
            opts.all_bonds = false;
            for (const auto& r : mps::flat_run(inst, policy_of(c), opts).trace.records) s.push_back(r.entropy);
          }
          curves[k] = std::move(s);
        });
        const auto model = models::model_entropy_curve(n, m_max);
        for (int m = 0; m <= m_max; ++m) {
          double mu = 0.0, sq = 0.0;
          for (const auto& cv : curves) mu += cv[static_cast<std::size_t>(m)];
          mu /= count;
          for (const auto& cv : curves) sq += (cv[static_cast<std::size_t>(m)] - mu) * (cv[static_cast<std::size_t>(m)] - mu);
          const double se = count > 1 ? std::sqrt(sq / (count - 1) / count) : 0.0;
          t.add({cell(n), cell(m), cell(static_cast<double>(m) / n), cell(model.states[static_cast<std::size_t>(m)].entropy),
                 cell(mu), cell(se), cell(count)});
        }
      }
      emit_to_dir(c, "models", report, t);
    } else {
      throw UsageError("unknown models report '" + report +
                       "' (constants, diagonal, reservoir, row, row_empirical, grouped, overlay)");
    }
  }
  return kExitOk;
}

int run_command(std::string_view name, const ExperimentConfig& config) {
  try {
    validate(config);
    if (name == "generate") return cmd_generate(config);
    if (name == "evolve") return cmd_evolve(config);
    if (name == "flat") return cmd_flat(config);
    if (name == "models") return cmd_models(config);
    if (name == "magic") return cmd_magic(config);
    if (name == "verify") return cmd_verify(config);
    std::cerr << "satmps: unknown command '" << name << "'\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "satmps: config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "satmps: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sat::DimacsError& e) {
    std::cerr << "satmps: DIMACS error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mps::SnapshotError& e) {
    std::cerr << "satmps: snapshot error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sat::RejectionBudgetExhausted& e) {
    std::cerr << "satmps: " << e.what() << " (clause density too deep in the UNSAT regime?)\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "satmps: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace satmps::harness
