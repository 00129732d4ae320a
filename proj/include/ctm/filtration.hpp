// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_FILTRATION_HPP
#define CTM_FILTRATION_HPP

#include <cstddef>
#include <vector>

#include <ctm/binary_matchers.hpp>
#include <ctm/bit_string.hpp>
#include <ctm/lanes.hpp>
#include <ctm/order.hpp>
#include <ctm/representations.hpp>

namespace ctm {

  /// Sorted 1-based text positions whose window passes the binary filter.
  /// Always a superset of the true occurrences.
  using CandidateSet = std::vector<Position>;

  /// Candidate p stands for the text window T[p..p+m-1]. With an empty
  /// pattern (m = 1) every position 1..n is a candidate.
  [[nodiscard]] CandidateSet filter(
    const BitString& pattern_bits, const BitString& text_bits, const BinaryMatcher& matcher);

  /// One precedence test per pattern position, positions taken in increasing
  /// order, stopping at the first failure. Exact for any window, candidate or
  /// not. Pre: i + m - 1 <= |text|.
  template <Element T>
  [[nodiscard]] bool verify(const GlobalParentRep& gp, Sequence<T> text, Position i) noexcept
  {
    const T* window = text.data() + (i - 1);
    for (Position q = 1; q <= gp.size(); ++q) {
      const Position parent = gp(q);
      if (parent == q) {
        continue;
      }
      // The window element at q must not precede the one at gp(q).
      const bool fails = parent > q ? earlier_precedes(window[q - 1], window[parent - 1])
                                    : later_precedes(window[q - 1], window[parent - 1]);
      if (fails) {
        return false;
      }
    }
    return true;
  }

  struct FilteredResult {
    MatchSet matches;
    std::size_t candidates = 0;
  };

  /// Binary representations of both sequences, exact filtering with
  /// `matcher`, then verification of each candidate. The text conversion
  /// runs on lane-wise comparisons selected by `backend`.
  template <Element T>
  [[nodiscard]] FilteredResult filtered_search_with_stats(
    Sequence<T> pattern, Sequence<T> text, const BinaryMatcher& matcher,
    LaneBackend backend = LaneBackend::native);

  template <Element T>
  [[nodiscard]] MatchSet filtered_search(
    Sequence<T> pattern, Sequence<T> text, const BinaryMatcher& matcher,
    LaneBackend backend = LaneBackend::native)
  {
    return filtered_search_with_stats(pattern, text, matcher, backend).matches;
  }

} // namespace ctm

#endif // CTM_FILTRATION_HPP
