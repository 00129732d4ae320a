// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_LANES_HPP
#define CTM_LANES_HPP

#include <cstdint>

#include <ctm/bit_string.hpp>
#include <ctm/order.hpp>

namespace ctm {

  /// Selects the lane-wise comparison implementation. `native` uses SIMD
  /// registers when the running CPU has them and silently degrades to the
  /// scalar emulation otherwise; both produce identical bits.
  enum class LaneBackend { scalar, native };

  template <Element T>
  inline constexpr unsigned lane_count = sizeof(T) == 1 ? 16 : 4;

  /// True if `native` would really run on SIMD lanes for this element type.
  template <Element T>
  [[nodiscard]] bool native_lanes_available() noexcept;

  template <>
  [[nodiscard]] bool native_lanes_available<std::int64_t>() noexcept;
  template <>
  [[nodiscard]] bool native_lanes_available<std::uint8_t>() noexcept;

  /// One block of the binary representation: bit k (k < lane_count<T>) is
  /// T[i+k] > T[i+k+1], computed by comparing the block loaded at i with the
  /// block loaded at i + 1. Needs lane_count<T> + 1 elements from position i
  /// (1-based); throws std::out_of_range otherwise, in which case the caller
  /// falls back to scalar compute_binary.
  template <Element T>
  [[nodiscard]] std::uint32_t packed_binary_scan(
    Sequence<T> text, Position i, LaneBackend backend = LaneBackend::native);

  /// compute_binary over the whole text in lane-sized blocks, with a scalar
  /// tail. Bit-identical to compute_binary(Sequence<T>).
  template <Element T>
  [[nodiscard]] BitString compute_binary(Sequence<T> text, LaneBackend backend);

  /// Bit j of the result is a[j] > b[j] for j < 16, bytes compared unsigned.
  [[nodiscard]] std::uint32_t greater_mask16(
    const std::uint8_t* a, const std::uint8_t* b, LaneBackend backend = LaneBackend::native) noexcept;

} // namespace ctm

#endif // CTM_LANES_HPP
