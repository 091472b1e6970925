// AVX2 variants of the set kernels. Functions carry the avx2 target
// attribute so this file builds without global -mavx2; dispatch happens at
// runtime via avx2_available().

#include "rnni/bitkernel.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace rnni {

namespace {

__attribute__((target("avx2"))) bool avx2_equal(const std::uint64_t* a,
                                                const std::uint64_t* b,
                                                std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i diff = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

__attribute__((target("avx2"))) bool avx2_subset(const std::uint64_t* a,
                                                 const std::uint64_t* b,
                                                 std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i stray = _mm256_andnot_si256(vb, va);  // a & ~b
    if (!_mm256_testz_si256(stray, stray)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

__attribute__((target("avx2"))) bool avx2_disjoint(const std::uint64_t* a,
                                                   const std::uint64_t* b,
                                                   std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

__attribute__((target("avx2"))) void avx2_or_assign(std::uint64_t* a,
                                                    const std::uint64_t* b,
                                                    std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < words; ++i) a[i] |= b[i];
}

// Nibble-LUT population count (Mula), accumulated with psadbw.
__attribute__((target("avx2"))) std::size_t avx2_popcount(
    const std::uint64_t* a, std::size_t words) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                  _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  std::uint64_t lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

const BitKernelOps kAvx2 = {
    avx2_equal,  avx2_subset,   avx2_disjoint,
    avx2_or_assign, avx2_popcount, "avx2",
};

}  // namespace

bool avx2_available() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

const BitKernelOps& avx2_kernels() { return kAvx2; }

}  // namespace rnni

#else  // non-x86: no AVX2 variant, dispatch falls back to scalar

namespace rnni {

bool avx2_available() { return false; }

const BitKernelOps& avx2_kernels() { return scalar_kernels(); }

}  // namespace rnni

#endif
