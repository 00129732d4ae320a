// SPDX-License-Identifier: Apache-2.0

#include <ctm/packed_matcher.hpp>

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include <ctm/filtration.hpp>

namespace ctm {

ShiftPlan build_shift_plan(Sequence<std::uint8_t> pattern)
{
  if (pattern.empty()) {
    throw std::invalid_argument("pattern must be non-empty");
  }
  if (pattern.size() > packed_max_pattern) {
    throw std::length_error("pattern too long for packed matcher");
  }
  ShiftPlan plan;
  plan.pattern_length = pattern.size();
  plan.global_parent = compute_global_parent(pattern);
  for (Position i = 1; i <= pattern.size(); ++i) {
    const Position parent = plan.global_parent(i);
    if (parent == i) {
      continue;
    }
    const int displacement = static_cast<int>(i) - static_cast<int>(parent);
    const bool strict = parent > i;
    auto it = std::find_if(plan.entries.begin(), plan.entries.end(), [&](const ShiftEntry& e) {
      return e.displacement == displacement && e.strict == strict;
    });
    if (it == plan.entries.end()) {
      plan.entries.push_back({displacement, strict, {}});
      it = plan.entries.end() - 1;
    }
    it->positions.push_back(i);
  }
  return plan;
}

std::uint32_t match_window(
  const ShiftPlan& plan, std::span<const std::uint8_t, packed_window> window, LaneBackend backend) noexcept
{
  // Zero padding on both sides lets every shifted copy be a plain load; the
  // padded lanes are the don't-care cells.
  alignas(16) std::uint8_t padded[3 * packed_window] = {};
  std::memcpy(padded + packed_window, window.data(), packed_window);
  const std::uint8_t* w = padded + packed_window;

  std::uint32_t occurrences = 0xFFFFu;
  for (const ShiftEntry& entry : plan.entries) {
    std::uint32_t block;
    if (entry.strict) {
      block = greater_mask16(w, w - entry.displacement, backend);
    } else {
      block = ~greater_mask16(w - entry.displacement, w, backend) & 0xFFFFu;
    }
    for (const Position i : entry.positions) {
      occurrences &= block >> (i - 1);
    }
  }
  return occurrences & plan.offset_mask();
}

MatchSet packed_search(Sequence<std::uint8_t> pattern, Sequence<std::uint8_t> text, LaneBackend backend)
{
  const ShiftPlan plan = build_shift_plan(pattern);
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  MatchSet matches;
  if (m > n) {
    return matches;
  }

  const std::size_t advance = packed_window + 1 - m;
  std::size_t start = 0;
  for (; start + packed_window <= n; start += advance) {
    std::uint32_t found = match_window(plan, text.subspan(start).first<packed_window>(), backend);
    while (found != 0) {
      matches.push_back(start + static_cast<std::size_t>(__builtin_ctz(found)) + 1);
      found &= found - 1;
    }
  }
  for (; start + m <= n; ++start) {
    if (verify(plan.global_parent, text, start + 1)) {
      matches.push_back(start + 1);
    }
  }
  return matches;
}

} // namespace ctm
