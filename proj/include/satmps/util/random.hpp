#pragma once

#include <cstdint>
#include <random>

namespace satmps {

// One round of the splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Counter-based seed derivation: child seeds depend only on (master, stream,
// index), so growing a sweep never reshuffles seeds that were already handed out.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept;

// Named streams keep the generators of different subsystems apart.
namespace streams {
inline constexpr std::uint64_t instances = 0x1157a9ceULL;
inline constexpr std::uint64_t rejection = 0x7e1ec7ULL;
inline constexpr std::uint64_t sampling = 0x5a3b1eULL;
inline constexpr std::uint64_t markov = 0x3a7c0fULL;
inline constexpr std::uint64_t row_model = 0x70e3dULL;
inline constexpr std::uint64_t states = 0x57a7e5ULL;
}  // namespace streams

// mt19937_64 with portable helpers. std::uniform_*_distribution is
// implementation-defined, so bounded integers and unit reals are drawn here
// to keep output identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform real in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace satmps
