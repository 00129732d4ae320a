// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_REPRESENTATIONS_HPP
#define CTM_REPRESENTATIONS_HPP

#include <cstddef>
#include <vector>

#include <ctm/bit_string.hpp>
#include <ctm/order.hpp>

namespace ctm {

  namespace detail {

    // 1-based array of positions or distances. Tag keeps the representations
    // from being mixed up.
    template <typename Tag>
    struct PositionArray {
      std::vector<std::size_t> values;

      [[nodiscard]] std::size_t operator()(Position i) const noexcept { return values[i - 1]; }
      [[nodiscard]] std::size_t size() const noexcept { return values.size(); }

      friend bool operator==(const PositionArray&, const PositionArray&) = default;
    };

  } // namespace detail

  /// pp(i): the nearest j < i with S[j] preceding S[i]; i itself if none.
  using PrefixParentRep = detail::PositionArray<struct PrefixParentTag>;

  /// pc(i): the child S[i] acquires when appended to the Cartesian tree of
  /// S[1..i-1]; i itself when it acquires none.
  using PrefixChildRep = detail::PositionArray<struct PrefixChildTag>;

  /// gp(i): the unique j > i with pc(j) = i if it exists, otherwise pp(i).
  using GlobalParentRep = detail::PositionArray<struct GlobalParentTag>;

  /// pd(i): i - pp(i), or 0 when S[i] has no preceding smaller element.
  using ParentDistanceRep = detail::PositionArray<struct ParentDistanceTag>;

  struct PrefixParentChild {
    PrefixParentRep parent;
    PrefixChildRep child;
  };

  /// Linear-time stack sweep producing prefix-parent and prefix-child arrays.
  /// The stack only ever holds indices whose elements increase under the
  /// strict precedence order.
  template <Element T>
  [[nodiscard]] PrefixParentChild compute_prefix_parent_child(Sequence<T> s);

  /// Same sweep as compute_prefix_parent_child; an index is redirected
  /// forward when it is popped and becomes the prefix-child of the current
  /// index.
  template <Element T>
  [[nodiscard]] GlobalParentRep compute_global_parent(Sequence<T> s);

  template <Element T>
  [[nodiscard]] ParentDistanceRep compute_parent_distance(Sequence<T> s);

  /// All three pattern representations from one sweep.
  struct PatternRepresentations {
    PrefixParentRep parent;
    PrefixChildRep child;
    GlobalParentRep global_parent;
  };

  template <Element T>
  [[nodiscard]] PatternRepresentations compute_representations(Sequence<T> s);

  /// Binary representation: length n - 1 (0 for n <= 1); bit i is 0 iff
  /// S[i] precedes S[i+1], i.e. S[i] <= S[i+1] as values.
  template <Element T>
  [[nodiscard]] BitString compute_binary(Sequence<T> s);

} // namespace ctm

#endif // CTM_REPRESENTATIONS_HPP
