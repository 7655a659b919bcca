// Compiled with -mavx2 -mfma -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "satmps/simd/kernels.hpp"

namespace satmps::simd::avx2 {
namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double sum_squares(const double* x, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d u = _mm256_loadu_pd(x + i);
    const __m256d v = _mm256_loadu_pd(x + i + 4);
    a0 = _mm256_fmadd_pd(u, u, a0);
    a1 = _mm256_fmadd_pd(v, v, a1);
  }
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
  }
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void scale(double* x, std::size_t n, double a) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

void multiply(double* x, const double* w, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(w + i)));
  for (; i < n; ++i) x[i] *= w[i];
}

__m128i load4_u16(const std::uint16_t* p) {
  return _mm_loadl_epi64(reinterpret_cast<const __m128i*>(p));
}

void gather(double* out, const std::uint16_t* index, const double* table, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i idx = _mm_cvtepu16_epi32(load4_u16(index + i));
    _mm256_storeu_pd(out + i, _mm256_i32gather_pd(table, idx, 8));
  }
  for (; i < n; ++i) out[i] = table[index[i]];
}

double zero_energy_sum_squares(const double* x, const std::uint16_t* energy, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i e = _mm256_cvtepu16_epi64(load4_u16(energy + i));
    const __m256d mask = _mm256_castsi256_pd(_mm256_cmpeq_epi64(e, zero));
    const __m256d v = _mm256_and_pd(_mm256_loadu_pd(x + i), mask);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    if (energy[i] == 0) s += x[i] * x[i];
  return s;
}

void pair_products(double* out, const double* x, std::size_t n, std::size_t flip) {
  if (n < 4) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * x[i ^ flip];
    return;
  }
  const std::size_t high = flip & ~std::size_t{3};
  const unsigned low = static_cast<unsigned>(flip & 3);
  for (std::size_t i = 0; i < n; i += 4) {
    const __m256d a = _mm256_loadu_pd(x + i);
    __m256d b = _mm256_loadu_pd(x + (i ^ high));
    if (low & 1) b = _mm256_permute_pd(b, 0b0101);
    if (low & 2) b = _mm256_permute2f128_pd(b, b, 1);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(a, b));
  }
}

void walsh_hadamard(double* x, std::size_t n) {
  if (n < 4) {
    scalar::table().walsh_hadamard(x, n);
    return;
  }
  // Stages h=1 and h=2 stay inside one register.
  for (std::size_t i = 0; i < n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    __m256d b = _mm256_permute_pd(v, 0b0101);
    v = _mm256_blend_pd(_mm256_add_pd(v, b), _mm256_sub_pd(b, v), 0b1010);
    b = _mm256_permute2f128_pd(v, v, 1);
    v = _mm256_blend_pd(_mm256_add_pd(v, b), _mm256_sub_pd(b, v), 0b1100);
    _mm256_storeu_pd(x + i, v);
  }
  for (std::size_t h = 4; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 4) {
        const __m256d a = _mm256_loadu_pd(x + j);
        const __m256d b = _mm256_loadu_pd(x + j + h);
        _mm256_storeu_pd(x + j, _mm256_add_pd(a, b));
        _mm256_storeu_pd(x + j + h, _mm256_sub_pd(a, b));
      }
    }
  }
}

// Nibble-table popcount over 256-bit lanes, reduced with vpsadbw.
__m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

std::uint64_t reduce_counts(__m256i acc) {
  return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

std::uint64_t popcount(const std::uint64_t* x, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  std::uint64_t c = reduce_counts(acc);
  for (; i < n; ++i) c += static_cast<std::uint64_t>(_mm_popcnt_u64(x[i]));
  return c;
}

std::uint64_t and_popcount(const std::uint64_t* x, const std::uint64_t* y, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i)));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  std::uint64_t c = reduce_counts(acc);
  for (; i < n; ++i) c += static_cast<std::uint64_t>(_mm_popcnt_u64(x[i] & y[i]));
  return c;
}

void and_not_assign(std::uint64_t* x, const std::uint64_t* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* px = reinterpret_cast<__m256i*>(x + i);
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(px, _mm256_andnot_si256(vy, _mm256_loadu_si256(px)));
  }
  for (; i < n; ++i) x[i] &= ~y[i];
}

bool is_subset(const std::uint64_t* x, const std::uint64_t* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    if (!_mm256_testc_si256(vy, vx)) return false;
  }
  for (; i < n; ++i)
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

}  // namespace satmps::simd::avx2
