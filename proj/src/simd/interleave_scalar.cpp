#include "ncg/simd/interleave.hpp"

namespace ncg::simd::scalar {

  namespace {
    inline bool crosses(std::int32_t lo, std::int32_t hi, std::int32_t a, std::int32_t b) {
      bool in_a = lo < a && a < hi;
      bool in_b = lo < b && b < hi;
      return in_a != in_b;
    }
  }  // namespace

  std::int64_t count_interleavings(const std::int32_t* lo, const std::int32_t* hi,
                                   std::size_t n) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        count += crosses(lo[i], hi[i], lo[j], hi[j]) ? 1 : 0;
      }
    }
    return count;
  }

  std::int64_t count_cross_interleavings(const std::int32_t* lo1, const std::int32_t* hi1,
                                         std::size_t n1, const std::int32_t* lo2,
                                         const std::int32_t* hi2, std::size_t n2) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n2; ++j) {
        count += crosses(lo1[i], hi1[i], lo2[j], hi2[j]) ? 1 : 0;
      }
    }
    return count;
  }

}  // namespace ncg::simd::scalar
