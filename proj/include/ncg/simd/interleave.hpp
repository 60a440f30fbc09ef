#pragma once

// Chord-crossing counts over boundary coordinates.
//
// A chord is a pair lo < hi of positions on the boundary circle of a disk;
// two chords with distinct endpoints cross iff exactly one endpoint of the
// second lies strictly between the endpoints of the first. Each kernel has a
// scalar reference and an AVX2 variant, chosen once at startup.

#include <cstdint>
#include <span>
#include <string_view>

namespace ncg::simd {

  enum class Backend { Scalar, Avx2 };

  std::string_view backend_name(Backend b) noexcept;
  bool backend_available(Backend b) noexcept;
  Backend active_backend() noexcept;
  // Overrides the automatic choice. Throws std::invalid_argument if the CPU
  // lacks the requested instruction set.
  void force_backend(Backend b);

  // Number of crossing pairs within one chord family.
  std::int64_t count_interleavings(std::span<const std::int32_t> lo,
                                   std::span<const std::int32_t> hi);

  // Number of crossing pairs (i, j) with i from the first family, j from the second.
  std::int64_t count_cross_interleavings(std::span<const std::int32_t> lo1,
                                         std::span<const std::int32_t> hi1,
                                         std::span<const std::int32_t> lo2,
                                         std::span<const std::int32_t> hi2);

  namespace scalar {
    std::int64_t count_interleavings(const std::int32_t* lo, const std::int32_t* hi,
                                     std::size_t n);
    std::int64_t count_cross_interleavings(const std::int32_t* lo1, const std::int32_t* hi1,
                                           std::size_t n1, const std::int32_t* lo2,
                                           const std::int32_t* hi2, std::size_t n2);
  }  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define NCG_HAVE_AVX2_KERNELS 1
  namespace avx2 {
    std::int64_t count_interleavings(const std::int32_t* lo, const std::int32_t* hi,
                                     std::size_t n);
    std::int64_t count_cross_interleavings(const std::int32_t* lo1, const std::int32_t* hi1,
                                           std::size_t n1, const std::int32_t* lo2,
                                           const std::int32_t* hi2, std::size_t n2);
  }  // namespace avx2
#endif

}  // namespace ncg::simd
