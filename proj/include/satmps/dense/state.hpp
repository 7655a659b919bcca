#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "satmps/magic/pauli.hpp"
#include "satmps/sat/cnf.hpp"

namespace satmps::dense {

inline constexpr int kDefaultDenseLimit = 14;
inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

class DenseLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Real amplitudes over 2^n basis states, x_1 the most significant index bit.
class DenseState {
 public:
  DenseState(int n, std::vector<double> amplitudes);
  static DenseState uniform(int n);
  // A computational basis state |index>.
  static DenseState basis(int n, std::uint64_t index);

  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  std::span<double> amplitudes() noexcept { return amplitudes_; }
  double operator[](std::uint64_t index) const { return amplitudes_.at(index); }

  double squared_norm() const;
  // Scales to unit norm; throws std::domain_error on the zero vector.
  void normalize();
  DenseState normalized() const;

 private:
  int n_;
  std::vector<double> amplitudes_;
};

class EnergyDiagonal {
 public:
  EnergyDiagonal(int n, int m, std::vector<std::uint16_t> values);
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::span<const std::uint16_t> values() const noexcept { return values_; }
  int operator[](std::uint64_t index) const { return values_.at(index); }
  int min_energy() const noexcept;

 private:
  int n_;
  int m_;
  std::vector<std::uint16_t> values_;
};

EnergyDiagonal build_energy_diagonal(const sat::CnfInstance& instance, int limit = kDefaultDenseLimit);

// exp(-tau E) |+...+>, normalized. tau = kInfiniteTime gives the projection onto
// the zero-energy subspace (std::domain_error if that subspace is empty).
DenseState ite_evolve(const EnergyDiagonal& diag, double tau);

// Weight of the normalized state on satisfying assignments.
double solution_weight(const DenseState& state, const EnergyDiagonal& diag);
double solution_weight(const DenseState& state, const sat::CnfInstance& instance);

struct SchmidtSpectrum {
  int cut = 0;
  std::vector<double> values;  // descending
};

// Singular values of the 2^cut x 2^(n-cut) amplitude matrix; values below
// 1e-14 times the state norm are dropped.
SchmidtSpectrum schmidt(const DenseState& state, int cut);
// -sum p ln p with p_i = lambda_i^2 / sum lambda^2.
double entanglement_entropy(const SchmidtSpectrum& spectrum);
double entanglement_entropy(const DenseState& state, int cut);

// Zeroes the amplitudes of assignments violating the clause.
void apply_projector(DenseState& state, const sat::Clause& clause);

struct FlatStep {
  SchmidtSpectrum spectrum;  // of the normalized state; empty once the state vanishes
  double norm_squared = 0.0;  // raw, starting from 1
};

// Clause projectors applied in instance order to the uniform state, without
// renormalization; one record per clause.
std::vector<FlatStep> flat_protocol_dense(const sat::CnfInstance& instance, int cut, int limit = kDefaultDenseLimit);
// Unnormalized state after all projectors (amplitude 2^{-n/2} on solutions).
DenseState flat_final_state(const sat::CnfInstance& instance, int limit = kDefaultDenseLimit);

// <psi|P|psi> for a real state; odd-Y strings give exactly 0.
double pauli_expectation(const DenseState& state, const magic::PauliString& pauli);

}  // namespace satmps::dense
