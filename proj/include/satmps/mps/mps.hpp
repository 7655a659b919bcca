#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace satmps::mps {

// A[s] is the Dl x Dr matrix for physical value s.
using SiteTensor = std::array<Eigen::MatrixXd, 2>;

struct TruncationPolicy {
  int max_bond = 256;
  double cutoff = 1e-10;  // relative to the largest singular value
  bool renormalize = true;
  // A gate that keeps less than this fraction of the norm is treated as
  // annihilating the state.
  double underflow = 1e-14;
  // Discarded weight (per gate) above which a capped truncation raises the alarm.
  double alarm_threshold = 1e-8;

  static TruncationPolicy unbounded() {
    TruncationPolicy p;
    p.max_bond = 1 << 20;
    p.cutoff = 1e-14;
    return p;
  }
};

struct TruncationStats {
  double discarded_weight = 0.0;  // summed over truncations
  double max_discarded = 0.0;     // largest single truncation
  int max_bond = 1;
  bool hit_cap = false;
  bool alarm = false;

  void merge(const TruncationStats& other);
};

class NormUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Open-boundary MPS over n qubits. The tensors always describe a unit-norm
// state in mixed canonical form around center(); the physical state is
// exp(log_norm()) times that state.
class Mps {
 public:
  Mps(std::vector<SiteTensor> sites, int center, double log_norm);
  static Mps product_plus(int n);
  // Exact MPS of a dense amplitude vector (n <= 24), built by sequential SVDs.
  static Mps from_dense(int n, const std::vector<double>& amplitudes, double cutoff = 1e-14);

  int size() const noexcept { return static_cast<int>(sites_.size()); }
  int center() const noexcept { return center_; }
  double log_norm() const noexcept { return log_norm_; }
  double norm_squared() const;
  void set_log_norm(double v) noexcept { log_norm_ = v; }

  const SiteTensor& site(int k) const { return sites_.at(static_cast<std::size_t>(k)); }
  SiteTensor& site(int k) { return sites_.at(static_cast<std::size_t>(k)); }
  const std::vector<SiteTensor>& sites() const noexcept { return sites_; }

  // Dimension of bond b (between sites b-1 and b), b in [0, n]; 1 at the ends.
  int bond_dimension(int b) const;
  std::vector<int> bond_dimensions() const;
  int max_bond_dimension() const;

  // QR sweeps; tensors between the old and new center become isometries.
  void move_center(int target);
  // Rescales the center tensor to unit norm and folds the factor into log_norm.
  // Returns the factor; throws NormUnderflow if it is below `floor`.
  double normalize_center(double floor = 0.0);
  // For in-place algorithms that leave the tensors canonical around k
  // themselves; no QR is performed.
  void declare_center(int k);

  // Schmidt values across bond `cut` (sites 0..cut-1 vs cut..n-1), of the unit-norm state.
  std::vector<double> schmidt_values(int cut);
  // Entropy at every bond 1..n-1.
  std::vector<double> bond_entropies();

  // Amplitude of basis state |index>, including the norm factor (n <= 64).
  double amplitude(std::uint64_t index) const;
  // Full contraction including the norm factor (n <= 24).
  std::vector<double> to_dense() const;

  // Largest deviation of the left/right tensors from isometry.
  double canonical_error() const;

 private:
  std::vector<SiteTensor> sites_;
  int center_ = 0;
  double log_norm_ = 0.0;
};

// Overlap <a|b> of the physical states (norm factors included).
double overlap(const Mps& a, const Mps& b);

double entropy_from_schmidt(const std::vector<double>& values);

}  // namespace satmps::mps
