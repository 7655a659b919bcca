#include <array>
#include <cmath>
#include <numbers>

#include "satmps/magic/stabilizer.hpp"

namespace satmps::magic {
namespace {

// Y = -i Yr with the real matrix Yr = [[0, 1], [-1, 0]]. Transfer matrices are
// built with Yr; each Y contributes a factor -i that is tracked separately.
struct Blocks {
  Eigen::MatrixXd t00, t01, t10, t11;  // A[s]^T L A[s']
};

Blocks blocks(const mps::SiteTensor& a, const Eigen::MatrixXd& l) {
  const Eigen::MatrixXd l0 = l * a[0];
  const Eigen::MatrixXd l1 = l * a[1];
  return Blocks{a[0].transpose() * l0, a[0].transpose() * l1, a[1].transpose() * l0, a[1].transpose() * l1};
}

Eigen::MatrixXd combine(const Blocks& b, Pauli p) {
  switch (p) {
    case Pauli::I: return b.t00 + b.t11;
    case Pauli::X: return b.t01 + b.t10;
    case Pauli::Y: return b.t01 - b.t10;
    case Pauli::Z: return b.t00 - b.t11;
  }
  return {};
}

// Tr(L L) with L possibly non-symmetric.
double trace_square(const Eigen::MatrixXd& l) { return l.cwiseProduct(l.transpose()).sum(); }

double real_expectation(const mps::Mps& state, const PauliString& pauli) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Ones(1, 1);
  Eigen::MatrixXd norm = Eigen::MatrixXd::Ones(1, 1);
  for (int k = 0; k < state.size(); ++k) {
    const auto& a = state.site(k);
    l = combine(blocks(a, l), pauli[k]);
    norm = a[0].transpose() * norm * a[0] + a[1].transpose() * norm * a[1];
  }
  return l(0, 0) / norm(0, 0);
}

// Symbol-wise product up to phase: XOR of the (x, z) bits.
Pauli multiply(Pauli a, Pauli b) {
  static constexpr std::uint8_t kBits[4] = {0b00, 0b10, 0b11, 0b01};  // I X Y Z as (x z)
  static constexpr Pauli kFromBits[4] = {Pauli::I, Pauli::Z, Pauli::X, Pauli::Y};
  return kFromBits[kBits[static_cast<int>(a)] ^ kBits[static_cast<int>(b)]];
}

}  // namespace

double pauli_expectation(const mps::Mps& state, const PauliString& pauli) {
  if (pauli.size() != state.size()) throw std::invalid_argument("Pauli string length differs from n");
  const int ny = pauli.y_count();
  if (ny % 2 == 1) return 0.0;
  const double v = real_expectation(state, pauli);
  // (-i)^{ny} = (-1)^{ny/2} for even ny
  return (ny / 2) % 2 == 1 ? -v : v;
}

PauliSampler::PauliSampler(mps::Mps state) : state_(std::move(state)) {
  state_.move_center(0);
  state_.normalize_center();
  state_.set_log_norm(0.0);
}

PauliSampler::Draw PauliSampler::draw(Rng& rng) const {
  const int n = state_.size();
  std::vector<Pauli> ops(static_cast<std::size_t>(n));
  Eigen::MatrixXd l = Eigen::MatrixXd::Ones(1, 1);
  int ny = 0;
  double log_prefix = 0.0;  // ln Pi(P_1..P_k)
  for (int k = 0; k < n; ++k) {
    const Blocks b = blocks(state_.site(k), l);
    std::array<Eigen::MatrixXd, 4> cand;
    std::array<double, 4> weight{};
    double total = 0.0;
    for (int p = 0; p < 4; ++p) {
      cand[static_cast<std::size_t>(p)] = combine(b, static_cast<Pauli>(p));
      const int y = ny + (p == static_cast<int>(Pauli::Y) ? 1 : 0);
      // Pi(prefix) = (-1)^{#Y} Tr(L L) / 2^{k+1}; the 2^{k+1} cancels in the ratio.
      const double w = (y % 2 ? -1.0 : 1.0) * trace_square(cand[static_cast<std::size_t>(p)]);
      weight[static_cast<std::size_t>(p)] = std::max(0.0, w);
      total += weight[static_cast<std::size_t>(p)];
    }
    double u = rng.uniform() * total;
    int pick = 3;
    for (int p = 0; p < 4; ++p) {
      if (u < weight[static_cast<std::size_t>(p)]) {
        pick = p;
        break;
      }
      u -= weight[static_cast<std::size_t>(p)];
    }
    while (weight[static_cast<std::size_t>(pick)] <= 0.0) pick = (pick + 3) % 4;
    ops[static_cast<std::size_t>(k)] = static_cast<Pauli>(pick);
    if (pick == static_cast<int>(Pauli::Y)) ++ny;
    l = std::move(cand[static_cast<std::size_t>(pick)]);
    log_prefix = std::log(weight[static_cast<std::size_t>(pick)]) - (k + 1) * std::numbers::ln2;
  }
  return Draw{PauliString(std::move(ops)), std::exp(log_prefix)};
}

MagicEstimate sample_m1(const mps::Mps& state, long num_samples, std::uint64_t seed) {
  if (num_samples < 1) throw std::invalid_argument("need at least one sample");
  PauliSampler sampler(state);
  Rng rng(seed);
  const int n = state.size();
  double sum = 0.0, sum2 = 0.0;
  for (long i = 0; i < num_samples; ++i) {
    const auto d = sampler.draw(rng);
    const double v = -std::log(d.probability) - n * std::numbers::ln2;
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / static_cast<double>(num_samples);
  const double var =
      num_samples > 1 ? std::max(0.0, (sum2 - num_samples * mean * mean) / static_cast<double>(num_samples - 1)) : 0.0;
  return MagicEstimate{1, mean, std::sqrt(var / static_cast<double>(num_samples)), num_samples};
}

MagicEstimate markov_m2(const mps::Mps& state, const MarkovOptions& options, std::uint64_t seed) {
  const int n = state.size();
  if (options.chain_length < options.batches || options.batches < 2)
    throw std::invalid_argument("chain must be at least as long as the number of batches (>= 2)");
  const long burn_in = options.burn_in < 0 ? 10L * n : options.burn_in;
  Rng rng(seed);
  mps::Mps psi = state;
  psi.move_center(0);
  psi.normalize_center();
  psi.set_log_norm(0.0);

  const PauliSampler sampler(psi);
  PauliString current = PauliString::identity(n);
  double e_current = pauli_expectation(psi, current);  // = 1
  const long batch_len = options.chain_length / options.batches;
  std::vector<double> batch_sum(static_cast<std::size_t>(options.batches), 0.0);
  const long total = burn_in + batch_len * options.batches;
  for (long step = 0; step < total; ++step) {
    // Three symmetric moves. Single-site moves cannot cross between even-Y
    // strings (the odd-Y strings in between have zero weight for real states),
    // hence the two-site move. Near stabilizer states the weight sits on a
    // group whose elements differ in many sites; multiplying by a string drawn
    // from Pi moves within that group. Its proposal probability Pi(P * P') is
    // symmetric because the string product commutes up to phase.
    PauliString proposal = current;
    const double kind = rng.uniform();
    if (kind < 0.75 || n == 1) {
      const int site = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      proposal.set(site, static_cast<Pauli>(rng.below(4)));
      if (kind >= 0.5 && n > 1) {
        const int other = (site + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)))) % n;
        proposal.set(other, static_cast<Pauli>(rng.below(4)));
      }
    } else {
      const auto q = sampler.draw(rng).pauli;
      for (int k = 0; k < n; ++k) proposal.set(k, multiply(proposal[k], q[k]));
    }
    const double e_prop = pauli_expectation(psi, proposal);
    const double ratio = e_current != 0.0 ? (e_prop * e_prop) / (e_current * e_current) : 1.0;
    if (ratio >= 1.0 || rng.uniform() < ratio) {
      current = std::move(proposal);
      e_current = e_prop;
    }
    if (step >= burn_in) {
      const long k = (step - burn_in) / batch_len;
      batch_sum[static_cast<std::size_t>(k)] += e_current * e_current;
    }
  }
  double mean = 0.0;
  for (auto& b : batch_sum) {
    b /= static_cast<double>(batch_len);
    mean += b;
  }
  mean /= options.batches;
  double var = 0.0;
  for (double b : batch_sum) var += (b - mean) * (b - mean);
  var /= (options.batches - 1);
  const double se_xi = std::sqrt(var / options.batches);
  return MagicEstimate{2, -std::log(mean), se_xi / mean, batch_len * options.batches};
}

}  // namespace satmps::magic
