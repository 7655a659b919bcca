#include <bit>

#include "satmps/simd/kernels.hpp"

namespace satmps::simd::scalar {
namespace {

double sum_squares(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void scale(double* x, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void multiply(double* x, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= w[i];
}

void gather(double* out, const std::uint16_t* index, const double* table, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = table[index[i]];
}

double zero_energy_sum_squares(const double* x, const std::uint16_t* energy, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (energy[i] == 0) s += x[i] * x[i];
  return s;
}

void pair_products(double* out, const double* x, std::size_t n, std::size_t flip) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * x[i ^ flip];
}

void walsh_hadamard(double* x, std::size_t n) {
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = x[j];
        const double b = x[j + h];
        x[j] = a + b;
        x[j + h] = a - b;
      }
    }
  }
}

std::uint64_t popcount(const std::uint64_t* x, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(x[i]));
  return c;
}

std::uint64_t and_popcount(const std::uint64_t* x, const std::uint64_t* y, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(x[i] & y[i]));
  return c;
}

void and_not_assign(std::uint64_t* x, const std::uint64_t* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] &= ~y[i];
}

bool is_subset(const std::uint64_t* x, const std::uint64_t* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] & ~y[i]) return false;
  return true;
}

constexpr KernelTable kTable{
    sum_squares, dot,           scale,          multiply,     gather,
    zero_energy_sum_squares,    pair_products,  walsh_hadamard,
    popcount,    and_popcount,  and_not_assign, is_subset,
};

}  // namespace

const KernelTable& table() noexcept { return kTable; }

}  // namespace satmps::simd::scalar
