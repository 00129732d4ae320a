// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_ORDER_HPP
#define CTM_ORDER_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ctm {

  /// 1-based position into a sequence.
  using Position = std::size_t;

  /// Sorted list of 1-based occurrence positions.
  using MatchSet = std::vector<Position>;

  /// Element types the library is instantiated for: wide signed integers
  /// (time series) and unsigned bytes (character data).
  template <typename T>
  concept Element = std::same_as<T, std::int64_t> || std::same_as<T, std::uint8_t>;

  template <Element T>
  using Sequence = std::span<const T>;

  /// The strict precedence relation: S[i] precedes S[j] iff S[i] < S[j], or
  /// the values are equal and i < j. Indices must be distinct.
  ///
  /// Every order test in the library goes through this predicate or through
  /// one of the two value-only shortcuts below, which are exact restatements
  /// of it for a known index order.
  template <typename T>
  [[nodiscard]] constexpr bool strictly_precedes(
    const T& value_i, Position index_i, const T& value_j, Position index_j) noexcept
  {
    return value_i < value_j || (!(value_j < value_i) && index_i < index_j);
  }

  /// strictly_precedes for an earlier element against a later one.
  template <typename T>
  [[nodiscard]] constexpr bool earlier_precedes(const T& earlier, const T& later) noexcept
  {
    return !(later < earlier);
  }

  /// strictly_precedes for a later element against an earlier one.
  template <typename T>
  [[nodiscard]] constexpr bool later_precedes(const T& later, const T& earlier) noexcept
  {
    return later < earlier;
  }

} // namespace ctm

#endif // CTM_ORDER_HPP
