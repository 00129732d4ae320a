// SPDX-License-Identifier: Apache-2.0

#include <ctm/filtration.hpp>

#include <numeric>
#include <stdexcept>

namespace ctm {

CandidateSet filter(const BitString& pattern_bits, const BitString& text_bits, const BinaryMatcher& matcher)
{
  return matcher.find_all(pattern_bits, text_bits);
}

template <Element T>
FilteredResult filtered_search_with_stats(
  Sequence<T> pattern, Sequence<T> text, const BinaryMatcher& matcher, LaneBackend backend)
{
  if (pattern.empty()) {
    throw std::invalid_argument("pattern must be non-empty");
  }
  FilteredResult result;
  const std::size_t m = pattern.size();
  if (m > text.size()) {
    return result;
  }
  if (m == 1) {
    result.matches.resize(text.size());
    std::iota(result.matches.begin(), result.matches.end(), Position{1});
    result.candidates = text.size();
    return result;
  }

  const auto candidates = filter(compute_binary(pattern), compute_binary(text, backend), matcher);
  result.candidates = candidates.size();
  const auto gp = compute_global_parent(pattern);
  for (const Position p : candidates) {
    if (verify(gp, text, p)) {
      result.matches.push_back(p);
    }
  }
  return result;
}

template FilteredResult filtered_search_with_stats<std::int64_t>(
  Sequence<std::int64_t>, Sequence<std::int64_t>, const BinaryMatcher&, LaneBackend);
template FilteredResult filtered_search_with_stats<std::uint8_t>(
  Sequence<std::uint8_t>, Sequence<std::uint8_t>, const BinaryMatcher&, LaneBackend);

} // namespace ctm
