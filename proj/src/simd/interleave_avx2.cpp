#include "ncg/simd/interleave.hpp"

#ifdef NCG_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace ncg::simd::avx2 {

  namespace {
    // Crossing mask of chord (lo, hi) against eight chords (a[k], b[k]).
    __attribute__((target("avx2"))) inline int cross_mask(__m256i lo, __m256i hi, __m256i a,
                                                          __m256i b) {
      __m256i a_in = _mm256_and_si256(_mm256_cmpgt_epi32(a, lo), _mm256_cmpgt_epi32(hi, a));
      __m256i b_in = _mm256_and_si256(_mm256_cmpgt_epi32(b, lo), _mm256_cmpgt_epi32(hi, b));
      __m256i x = _mm256_xor_si256(a_in, b_in);
      return _mm256_movemask_ps(_mm256_castsi256_ps(x));
    }

    __attribute__((target("avx2"))) std::int64_t row_count(std::int32_t lo_i, std::int32_t hi_i,
                                                           const std::int32_t* lo,
                                                           const std::int32_t* hi,
                                                           std::size_t begin, std::size_t end) {
      std::int64_t count = 0;
      __m256i vlo = _mm256_set1_epi32(lo_i);
      __m256i vhi = _mm256_set1_epi32(hi_i);
      std::size_t j = begin;
      for (; j + 8 <= end; j += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + j));
        count += __builtin_popcount(static_cast<unsigned>(cross_mask(vlo, vhi, a, b)));
      }
      for (; j < end; ++j) {
        bool in_a = lo_i < lo[j] && lo[j] < hi_i;
        bool in_b = lo_i < hi[j] && hi[j] < hi_i;
        count += (in_a != in_b) ? 1 : 0;
      }
      return count;
    }
  }  // namespace

  __attribute__((target("avx2"))) std::int64_t count_interleavings(const std::int32_t* lo,
                                                                   const std::int32_t* hi,
                                                                   std::size_t n) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      count += row_count(lo[i], hi[i], lo, hi, i + 1, n);
    }
    return count;
  }

  __attribute__((target("avx2"))) std::int64_t count_cross_interleavings(
      const std::int32_t* lo1, const std::int32_t* hi1, std::size_t n1, const std::int32_t* lo2,
      const std::int32_t* hi2, std::size_t n2) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      count += row_count(lo1[i], hi1[i], lo2, hi2, 0, n2);
    }
    return count;
  }

}  // namespace ncg::simd::avx2

#endif
