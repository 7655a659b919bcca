#include "satmps/dense/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "satmps/mps/linalg.hpp"
#include "satmps/simd/kernels.hpp"

namespace satmps::dense {
namespace {

void check_dense_limit(int n, int limit) {
  if (n > limit)
    throw DenseLimitExceeded("n=" + std::to_string(n) + " exceeds the dense limit " + std::to_string(limit));
  if (n > 30) throw DenseLimitExceeded("dense states are capped at n=30");
}

}  // namespace

DenseState::DenseState(int n, std::vector<double> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
  if (n < 0 || n > 30) throw std::invalid_argument("dense state needs 0 <= n <= 30");
  if (amplitudes_.size() != (std::size_t{1} << n)) throw std::invalid_argument("amplitude vector length is not 2^n");
  for (double a : amplitudes_)
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite amplitude");
}

DenseState DenseState::uniform(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("dense state needs 0 <= n <= 30");
  const std::size_t dim = std::size_t{1} << n;
  return DenseState(n, std::vector<double>(dim, std::pow(2.0, -0.5 * n)));
}

DenseState DenseState::basis(int n, std::uint64_t index) {
  if (n < 0 || n > 30) throw std::invalid_argument("dense state needs 0 <= n <= 30");
  std::vector<double> a(std::size_t{1} << n, 0.0);
  a.at(index) = 1.0;
  return DenseState(n, std::move(a));
}

double DenseState::squared_norm() const { return simd::sum_squares(amplitudes_); }

void DenseState::normalize() {
  const double nrm2 = squared_norm();
  if (!(nrm2 > 0.0)) throw std::domain_error("cannot normalize the zero state");
  simd::scale(amplitudes_, 1.0 / std::sqrt(nrm2));
}

DenseState DenseState::normalized() const {
  DenseState copy = *this;
  copy.normalize();
  return copy;
}

EnergyDiagonal::EnergyDiagonal(int n, int m, std::vector<std::uint16_t> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << n)) throw std::invalid_argument("energy diagonal length is not 2^n");
  for (auto v : values_)
    if (v > m) throw std::invalid_argument("energy entry exceeds m");
}

int EnergyDiagonal::min_energy() const noexcept {
  return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end());
}

EnergyDiagonal build_energy_diagonal(const sat::CnfInstance& instance, int limit) {
  const int n = instance.n();
  check_dense_limit(n, limit);
  if (instance.m() > 65535) throw std::invalid_argument("energy diagonal stores counts in 16 bits");
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint16_t> values(dim, 0);
  for (const auto& c : instance.clauses()) {
    const std::uint64_t mask = c.mask(n);
    const std::uint64_t pattern = c.violating_pattern(n);
    for (std::uint64_t x = 0; x < dim; ++x) values[x] += (x & mask) == pattern ? 1 : 0;
  }
  return EnergyDiagonal(n, instance.m(), std::move(values));
}

DenseState ite_evolve(const EnergyDiagonal& diag, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be non-negative");
  const int e_min = diag.min_energy();
  std::vector<double> table(static_cast<std::size_t>(diag.m()) + 1, 0.0);
  if (std::isinf(tau)) {
    if (e_min > 0) throw std::domain_error("instance is unsatisfiable: no zero-energy state to project onto");
    table[0] = 1.0;
  } else {
    // Shift by the minimum energy so the largest weight is exactly 1.
    for (std::size_t k = 0; k < table.size(); ++k) table[k] = std::exp(-tau * (static_cast<double>(k) - e_min));
  }
  std::vector<double> amps(diag.values().size());
  simd::gather(amps, diag.values(), table);
  DenseState state(diag.n(), std::move(amps));
  state.normalize();
  return state;
}

double solution_weight(const DenseState& state, const EnergyDiagonal& diag) {
  if (state.n() != diag.n()) throw std::invalid_argument("state and diagonal sizes differ");
  const double total = state.squared_norm();
  if (!(total > 0.0)) return 0.0;
  return simd::zero_energy_sum_squares(state.amplitudes(), diag.values()) / total;
}

double solution_weight(const DenseState& state, const sat::CnfInstance& instance) {
  return solution_weight(state, build_energy_diagonal(instance, std::max(instance.n(), kDefaultDenseLimit)));
}

SchmidtSpectrum schmidt(const DenseState& state, int cut) {
  const int n = state.n();
  if (cut < 1 || cut > n - 1) throw std::invalid_argument("cut must satisfy 1 <= cut <= n-1");
  const Eigen::Index rows = Eigen::Index{1} << cut;
  const Eigen::Index cols = Eigen::Index{1} << (n - cut);
  // Row-major reshape: row = leading cut bits.
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(
      state.amplitudes().data(), rows, cols);
  const Eigen::MatrixXd m = view;
  const Eigen::VectorXd s = linalg::singular_values(m);
  const double threshold = 1e-14 * std::sqrt(state.squared_norm());
  SchmidtSpectrum out{cut, {}};
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) out.values.push_back(s(i));
  return out;
}

double entanglement_entropy(const SchmidtSpectrum& spectrum) {
  double total = 0.0;
  for (double v : spectrum.values) total += v * v;
  if (!(total > 0.0)) return 0.0;
  double s = 0.0;
  for (double v : spectrum.values) {
    const double p = v * v / total;
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

double entanglement_entropy(const DenseState& state, int cut) { return entanglement_entropy(schmidt(state, cut)); }

void apply_projector(DenseState& state, const sat::Clause& clause) {
  const int n = state.n();
  if (clause.max_variable() > n) throw std::invalid_argument("clause refers to a variable beyond n");
  const std::uint64_t mask = clause.mask(n);
  const std::uint64_t pattern = clause.violating_pattern(n);
  auto amps = state.amplitudes();
  for (std::uint64_t x = 0; x < amps.size(); ++x)
    if ((x & mask) == pattern) amps[x] = 0.0;
}

std::vector<FlatStep> flat_protocol_dense(const sat::CnfInstance& instance, int cut, int limit) {
  check_dense_limit(instance.n(), limit);
  DenseState state = DenseState::uniform(instance.n());
  std::vector<FlatStep> trace;
  trace.reserve(static_cast<std::size_t>(instance.m()));
  for (const auto& c : instance.clauses()) {
    apply_projector(state, c);
    FlatStep step;
    step.norm_squared = state.squared_norm();
    if (step.norm_squared > 0.0) {
      step.spectrum = schmidt(state.normalized(), cut);
    } else {
      step.spectrum.cut = cut;
    }
    trace.push_back(std::move(step));
  }
  return trace;
}

DenseState flat_final_state(const sat::CnfInstance& instance, int limit) {
  check_dense_limit(instance.n(), limit);
  DenseState state = DenseState::uniform(instance.n());
  for (const auto& c : instance.clauses()) apply_projector(state, c);
  return state;
}

}  // namespace satmps::dense
