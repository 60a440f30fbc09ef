#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ncg/simd/interleave.hpp"

namespace ncg::simd {

  namespace {
    Backend detect() noexcept {
      if (const char* env = std::getenv("NCG_SIMD"); env != nullptr && std::string(env) == "scalar") {
        return Backend::Scalar;
      }
      return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
    }

    std::atomic<Backend>& current() {
      static std::atomic<Backend> b{detect()};
      return b;
    }
  }  // namespace

  std::string_view backend_name(Backend b) noexcept {
    return b == Backend::Avx2 ? "avx2" : "scalar";
  }

  bool backend_available(Backend b) noexcept {
    switch (b) {
      case Backend::Scalar: return true;
      case Backend::Avx2:
#ifdef NCG_HAVE_AVX2_KERNELS
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
  }

  Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

  void force_backend(Backend b) {
    if (!backend_available(b)) {
      throw std::invalid_argument("SIMD backend not available: " + std::string(backend_name(b)));
    }
    current().store(b, std::memory_order_relaxed);
  }

  std::int64_t count_interleavings(std::span<const std::int32_t> lo,
                                   std::span<const std::int32_t> hi) {
    if (lo.size() != hi.size()) {
      throw std::invalid_argument("chord endpoint arrays differ in length");
    }
#ifdef NCG_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::Avx2) {
      return avx2::count_interleavings(lo.data(), hi.data(), lo.size());
    }
#endif
    return scalar::count_interleavings(lo.data(), hi.data(), lo.size());
  }

  std::int64_t count_cross_interleavings(std::span<const std::int32_t> lo1,
                                         std::span<const std::int32_t> hi1,
                                         std::span<const std::int32_t> lo2,
                                         std::span<const std::int32_t> hi2) {
    if (lo1.size() != hi1.size() || lo2.size() != hi2.size()) {
      throw std::invalid_argument("chord endpoint arrays differ in length");
    }
#ifdef NCG_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::Avx2) {
      return avx2::count_cross_interleavings(lo1.data(), hi1.data(), lo1.size(), lo2.data(),
                                             hi2.data(), hi2.size());
    }
#endif
    return scalar::count_cross_interleavings(lo1.data(), hi1.data(), lo1.size(), lo2.data(),
                                             hi2.data(), hi2.size());
  }

}  // namespace ncg::simd
