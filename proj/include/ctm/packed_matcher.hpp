// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_PACKED_MATCHER_HPP
#define CTM_PACKED_MATCHER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <ctm/lanes.hpp>
#include <ctm/order.hpp>
#include <ctm/representations.hpp>

namespace ctm {

  inline constexpr std::size_t packed_window = 16;
  inline constexpr std::size_t packed_max_pattern = 16;

  /// One computed comparison block, shared by every pattern position i with
  /// the same displacement i - gp(i).
  ///
  /// strict (gp(i) > i, displacement < 0): R[j] = W[j] > W[j - displacement]
  /// non-strict (gp(i) < i, displacement > 0): R[j] = W[j] >= W[j - displacement]
  ///
  /// Lanes whose partner falls outside the window are don't-care; they are
  /// never read for an offset that survives the final mask.
  struct ShiftEntry {
    int displacement = 0;
    bool strict = false;
    std::vector<Position> positions;
  };

  struct ShiftPlan {
    std::size_t pattern_length = 0;
    GlobalParentRep global_parent;
    std::vector<ShiftEntry> entries;

    /// Offsets 0..16-m of a window can start an occurrence.
    [[nodiscard]] std::uint32_t offset_mask() const noexcept
    {
      return (std::uint32_t{1} << (packed_window + 1 - pattern_length)) - 1;
    }
  };

  /// Throws std::length_error("pattern too long for packed matcher") when
  /// m > 16 and std::invalid_argument on an empty pattern.
  [[nodiscard]] ShiftPlan build_shift_plan(Sequence<std::uint8_t> pattern);

  /// Bit j is set iff an occurrence starts at offset j of the 16-byte block.
  [[nodiscard]] std::uint32_t match_window(
    const ShiftPlan& plan, std::span<const std::uint8_t, packed_window> window,
    LaneBackend backend = LaneBackend::native) noexcept;

  /// Windows advance by 17 - m; the positions left after the last full
  /// window are checked one by one with the global-parent test.
  [[nodiscard]] MatchSet packed_search(
    Sequence<std::uint8_t> pattern, Sequence<std::uint8_t> text, LaneBackend backend = LaneBackend::native);

} // namespace ctm

#endif // CTM_PACKED_MATCHER_HPP
