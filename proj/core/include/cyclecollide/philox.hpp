#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace cyclecollide::mc {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// One stream of a Philox4x32-10 generator.
///
/// The 64-bit seed is the key. The 128-bit counter is (block, stream): the
/// low 64 bits count blocks within the stream, the high 64 bits name the
/// stream, so streams derived from one seed never overlap.
class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-shift with
  /// rejection, so the result is exactly uniform.
  std::uint64_t bounded(std::uint64_t bound) noexcept;

 private:
  void refill() noexcept;

  std::array<std::uint32_t, 2> key_;
  std::uint64_t block_ = 0;
  std::uint64_t stream_;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned next_ = 4;
};

}  // namespace cyclecollide::mc
