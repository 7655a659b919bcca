#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "satmps/simd/kernels.hpp"

namespace satmps::simd {
namespace {

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("SATMPS_ISA"); env != nullptr && std::string(env) == "scalar")
    return Isa::scalar;
  return detected_isa();
}

std::atomic<Isa>& active_slot() noexcept {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("simd kernel: operand sizes differ");
}

void check_power_of_two(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("simd kernel: size must be a power of two");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(SATMPS_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") &&
             __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("ISA not supported on this machine: " + std::string(isa_name(isa)));
  active_slot().store(isa, std::memory_order_relaxed);
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("ISA not supported on this machine: " + std::string(isa_name(isa)));
#if defined(SATMPS_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return avx2::table();
#endif
  return scalar::table();
}

const KernelTable& active_kernels() noexcept {
#if defined(SATMPS_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::avx2) return avx2::table();
#endif
  return scalar::table();
}

double sum_squares(std::span<const double> x) { return active_kernels().sum_squares(x.data(), x.size()); }

double dot(std::span<const double> x, std::span<const double> y) {
  check_sizes(x.size(), y.size());
  return active_kernels().dot(x.data(), y.data(), x.size());
}

void scale(std::span<double> x, double a) { active_kernels().scale(x.data(), x.size(), a); }

void multiply(std::span<double> x, std::span<const double> w) {
  check_sizes(x.size(), w.size());
  active_kernels().multiply(x.data(), w.data(), x.size());
}

void gather(std::span<double> out, std::span<const std::uint16_t> index, std::span<const double> table) {
  check_sizes(out.size(), index.size());
  active_kernels().gather(out.data(), index.data(), table.data(), out.size());
}

double zero_energy_sum_squares(std::span<const double> x, std::span<const std::uint16_t> energy) {
  check_sizes(x.size(), energy.size());
  return active_kernels().zero_energy_sum_squares(x.data(), energy.data(), x.size());
}

void pair_products(std::span<double> out, std::span<const double> x, std::size_t flip) {
  check_sizes(out.size(), x.size());
  check_power_of_two(x.size());
  if (flip >= x.size()) throw std::invalid_argument("pair_products: flip mask out of range");
  active_kernels().pair_products(out.data(), x.data(), x.size(), flip);
}

void walsh_hadamard(std::span<double> x) {
  check_power_of_two(x.size());
  active_kernels().walsh_hadamard(x.data(), x.size());
}

std::uint64_t popcount(std::span<const std::uint64_t> x) { return active_kernels().popcount(x.data(), x.size()); }

std::uint64_t and_popcount(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  check_sizes(x.size(), y.size());
  return active_kernels().and_popcount(x.data(), y.data(), x.size());
}

void and_not_assign(std::span<std::uint64_t> x, std::span<const std::uint64_t> y) {
  check_sizes(x.size(), y.size());
  active_kernels().and_not_assign(x.data(), y.data(), x.size());
}

bool is_subset(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  check_sizes(x.size(), y.size());
  return active_kernels().is_subset(x.data(), y.data(), x.size());
}

}  // namespace satmps::simd
