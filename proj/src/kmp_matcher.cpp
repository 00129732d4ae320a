// SPDX-License-Identifier: Apache-2.0

#include <ctm/kmp_matcher.hpp>

#include <deque>
#include <stdexcept>

namespace ctm {

template <Element T>
PatternModel<T>::PatternModel(Sequence<T> pattern)
  : pattern_(pattern.begin(), pattern.end())
{
  if (pattern_.empty()) {
    throw std::invalid_argument("pattern must be non-empty");
  }
  reps_ = compute_representations(Sequence<T>(pattern_));

  // The pattern is matched against itself with the same extension test the
  // text search uses; every single element matches, so failure(q) >= 1 for
  // q >= 2.
  const std::size_t m = pattern_.size();
  failure_.values.assign(m, 0);
  NullProbe probe;
  std::size_t k = 0;
  for (Position q = 2; q <= m; ++q) {
    while (k != 0 && !detail::extends_match(reps_.parent, reps_.child, Sequence<T>(pattern_), q, k, probe)) {
      k = failure_(k);
    }
    ++k;
    failure_.values[q - 1] = k;
  }
}

template <Element T>
MatchSet baseline_pd_search(Sequence<T> pattern, Sequence<T> text)
{
  const PatternModel<T> model(pattern);
  const auto pd = compute_parent_distance(pattern);
  const auto& failure = model.failure();
  const std::size_t m = pattern.size();

  MatchSet matches;
  std::deque<std::size_t> window; // 0-based indices, increasing under precedence
  std::size_t q = 0;
  auto trim_front = [&](std::size_t start) {
    while (!window.empty() && window.front() < start) {
      window.pop_front();
    }
  };

  for (std::size_t t = 0; t < text.size(); ++t) {
    while (!window.empty() && !earlier_precedes(text[window.back()], text[t])) {
      window.pop_back();
    }
    const bool has_parent = !window.empty();
    const std::size_t parent = has_parent ? window.back() : 0;
    for (;;) {
      const std::size_t distance = has_parent && t - parent <= q ? t - parent : 0;
      if (distance == pd(q + 1)) {
        break;
      }
      q = failure(q);
      trim_front(t - q);
    }
    window.push_back(t);
    ++q;
    if (q == m) {
      matches.push_back(t + 2 - m);
      q = failure(q);
      trim_front(t + 1 - q);
    }
  }
  return matches;
}

template class PatternModel<std::int64_t>;
template class PatternModel<std::uint8_t>;
template MatchSet baseline_pd_search<std::int64_t>(Sequence<std::int64_t>, Sequence<std::int64_t>);
template MatchSet baseline_pd_search<std::uint8_t>(Sequence<std::uint8_t>, Sequence<std::uint8_t>);

} // namespace ctm
