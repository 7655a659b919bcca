#pragma once

// Data-parallel loops used by the dense oracle, the stabilizer transforms and
// the bit-matrix code. Each kernel has a scalar reference in namespace
// `scalar`; on x86-64 an AVX2 build of the same kernels is selected at runtime
// when the CPU supports it. SATMPS_ISA=scalar in the environment forces the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace satmps::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
// Best ISA available on this CPU and in this build.
Isa detected_isa() noexcept;
Isa active_isa() noexcept;
// Throws std::invalid_argument if the ISA is not supported here.
void set_active_isa(Isa isa);

struct KernelTable {
  double (*sum_squares)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*scale)(double* x, std::size_t n, double a);
  void (*multiply)(double* x, const double* w, std::size_t n);
  void (*gather)(double* out, const std::uint16_t* index, const double* table, std::size_t n);
  double (*zero_energy_sum_squares)(const double* x, const std::uint16_t* energy, std::size_t n);
  void (*pair_products)(double* out, const double* x, std::size_t n, std::size_t flip);
  void (*walsh_hadamard)(double* x, std::size_t n);
  std::uint64_t (*popcount)(const std::uint64_t* x, std::size_t n);
  std::uint64_t (*and_popcount)(const std::uint64_t* x, const std::uint64_t* y, std::size_t n);
  void (*and_not_assign)(std::uint64_t* x, const std::uint64_t* y, std::size_t n);
  bool (*is_subset)(const std::uint64_t* x, const std::uint64_t* y, std::size_t n);
};

const KernelTable& kernels(Isa isa);
const KernelTable& active_kernels() noexcept;

// Convenience wrappers over the active table.
double sum_squares(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
void scale(std::span<double> x, double a);
// x[i] *= w[i]
void multiply(std::span<double> x, std::span<const double> w);
// out[i] = table[index[i]]
void gather(std::span<double> out, std::span<const std::uint16_t> index, std::span<const double> table);
// sum of x[i]^2 over entries with energy[i] == 0
double zero_energy_sum_squares(std::span<const double> x, std::span<const std::uint16_t> energy);
// out[i] = x[i] * x[i ^ flip]; size must be a power of two above flip
void pair_products(std::span<double> out, std::span<const double> x, std::size_t flip);
// Unnormalized in-place Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::span<double> x);
std::uint64_t popcount(std::span<const std::uint64_t> x);
std::uint64_t and_popcount(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);
// x &= ~y
void and_not_assign(std::span<std::uint64_t> x, std::span<const std::uint64_t> y);
// true iff every set bit of x is also set in y
bool is_subset(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);

namespace scalar {
const KernelTable& table() noexcept;
}
#if defined(SATMPS_HAVE_AVX2_KERNELS)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif

}  // namespace satmps::simd
