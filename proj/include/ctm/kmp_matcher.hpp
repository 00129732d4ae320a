// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_KMP_MATCHER_HPP
#define CTM_KMP_MATCHER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <ctm/order.hpp>
#include <ctm/representations.hpp>

namespace ctm {

  /// failure(q) for q in 1..m: the longest k < q such that the Cartesian tree
  /// of P[1..k] equals that of P[q-k+1..q].
  using FailureFunction = detail::PositionArray<struct FailureTag>;

  /// Search probes are the instrumentation switch of the matcher: the default
  /// probe compiles to nothing, other probes observe every element comparison
  /// and every state the automaton passes through.
  struct NullProbe {
    constexpr void compared() noexcept {}
    constexpr void advanced(Position, std::size_t) noexcept {}
  };

  struct ComparisonCounter {
    std::uint64_t comparisons = 0;

    constexpr void compared() noexcept { ++comparisons; }
    constexpr void advanced(Position, std::size_t) noexcept {}
  };

  namespace detail {

    // True iff T[i-q..i] has the prefix-parent representation of P[1..q+1],
    // given that T[i-q..i-1] already has that of P[1..q]. Indices into pp/pc
    // and text are 1-based positions. The two sides are skipped when they
    // would compare T[i] with itself.
    template <Element T, typename Probe>
    [[nodiscard]] inline bool extends_match(
      const PrefixParentRep& pp, const PrefixChildRep& pc, Sequence<T> text, Position i, std::size_t q,
      Probe& probe)
    {
      const T& current = text[i - 1];
      const Position parent = pp(q + 1);
      if (parent != q + 1) {
        probe.compared();
        if (!earlier_precedes(text[i - q - 2 + parent], current)) {
          return false;
        }
      }
      const Position child = pc(q + 1);
      if (child != q + 1) {
        probe.compared();
        if (!later_precedes(current, text[i - q - 2 + child])) {
          return false;
        }
      }
      return true;
    }

  } // namespace detail

  /// Preprocessed pattern: representations plus failure function. Immutable.
  template <Element T>
  class PatternModel {
  public:
    /// Throws std::invalid_argument("pattern must be non-empty").
    explicit PatternModel(Sequence<T> pattern);

    [[nodiscard]] std::size_t size() const noexcept { return pattern_.size(); }
    [[nodiscard]] Sequence<T> pattern() const noexcept { return pattern_; }
    [[nodiscard]] const PrefixParentRep& prefix_parent() const noexcept { return reps_.parent; }
    [[nodiscard]] const PrefixChildRep& prefix_child() const noexcept { return reps_.child; }
    [[nodiscard]] const GlobalParentRep& global_parent() const noexcept { return reps_.global_parent; }
    [[nodiscard]] const FailureFunction& failure() const noexcept { return failure_; }

  private:
    std::vector<T> pattern_;
    PatternRepresentations reps_;
    FailureFunction failure_;
  };

  template <Element T>
  [[nodiscard]] PatternModel<T> build_pattern_model(Sequence<T> pattern)
  {
    return PatternModel<T>(pattern);
  }

  /// Pre: 0 <= q < m, 1 <= i - q, i <= |T|, and T[i-q..i-1] matches P[1..q].
  template <Element T, typename Probe = NullProbe>
  [[nodiscard]] bool extension_check(
    const PatternModel<T>& model, Sequence<T> text, Position i, std::size_t q, Probe&& probe = {})
  {
    return detail::extends_match(model.prefix_parent(), model.prefix_child(), text, i, q, probe);
  }

  /// Linear-time text search. Every loop iteration spends at most two
  /// element comparisons and there are at most 2n iterations.
  template <Element T, typename Probe>
  [[nodiscard]] MatchSet search(const PatternModel<T>& model, Sequence<T> text, Probe& probe)
  {
    MatchSet matches;
    const std::size_t m = model.size();
    const auto& pp = model.prefix_parent();
    const auto& pc = model.prefix_child();
    const auto& failure = model.failure();
    std::size_t q = 0;
    for (Position i = 1; i <= text.size(); ++i) {
      while (q != 0) {
        if (detail::extends_match(pp, pc, text, i, q, probe)) {
          break;
        }
        q = failure(q);
      }
      ++q;
      probe.advanced(i, q);
      if (q == m) {
        matches.push_back(i - m + 1);
        q = failure(q);
      }
    }
    return matches;
  }

  template <Element T>
  [[nodiscard]] MatchSet search(const PatternModel<T>& model, Sequence<T> text)
  {
    NullProbe probe;
    return search(model, text, probe);
  }

  /// The earlier parent-distance algorithm, kept as a benchmark baseline: the
  /// parent-distance of each text element inside the current window is
  /// recomputed from a deque of window indices and compared with the
  /// pattern's.
  template <Element T>
  [[nodiscard]] MatchSet baseline_pd_search(Sequence<T> pattern, Sequence<T> text);

} // namespace ctm

#endif // CTM_KMP_MATCHER_HPP
