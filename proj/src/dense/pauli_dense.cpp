#include <bit>

#include "satmps/dense/state.hpp"

namespace satmps::dense {

double pauli_expectation(const DenseState& state, const magic::PauliString& pauli) {
  if (pauli.size() != state.n()) throw std::invalid_argument("Pauli string length differs from n");
  const int ny = pauli.y_count();
  // <psi|P|psi> is real; for a real state an odd number of Y factors makes it
  // purely imaginary, hence zero.
  if (ny % 2 == 1) return 0.0;
  const std::uint64_t flip = pauli.flip_mask();
  const std::uint64_t phase = pauli.phase_mask();
  const auto amps = state.amplitudes();
  double s = 0.0;
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    const double term = amps[x ^ flip] * amps[x];
    s += (std::popcount(x & phase) & 1) ? -term : term;
  }
  // i^{#Y} for even #Y
  return (ny / 2) % 2 == 1 ? -s : s;
}

}  // namespace satmps::dense
