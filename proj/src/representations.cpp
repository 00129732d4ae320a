// SPDX-License-Identifier: Apache-2.0

#include <ctm/representations.hpp>

#include <cassert>

namespace ctm {

namespace {

  // One pass of the stack construction. Positions are 1-based in the output
  // arrays; the stack stores 0-based indices.
  template <Element T>
  PatternRepresentations sweep(Sequence<T> s)
  {
    const std::size_t n = s.size();
    PatternRepresentations out;
    out.parent.values.resize(n);
    out.child.values.resize(n);
    out.global_parent.values.resize(n);

    std::vector<std::size_t> stack;
    stack.reserve(n);
#ifndef NDEBUG
    std::vector<bool> redirected(n, false);
#endif

    for (std::size_t i = 0; i < n; ++i) {
      std::size_t next = i;
      while (!stack.empty()) {
        const std::size_t j = stack.back();
        if (strictly_precedes(s[j], j, s[i], i)) {
          break;
        }
        stack.pop_back();
        next = j;
      }
      out.child.values[i] = next + 1;
      out.parent.values[i] = stack.empty() ? i + 1 : stack.back() + 1;
      out.global_parent.values[i] = out.parent.values[i];
      if (next != i) {
        // `next` was popped for good, so no later index can name it again.
#ifndef NDEBUG
        assert(!redirected[next]);
        redirected[next] = true;
#endif
        out.global_parent.values[next] = i + 1;
      }
      stack.push_back(i);
    }
    return out;
  }

} // namespace

template <Element T>
PrefixParentChild compute_prefix_parent_child(Sequence<T> s)
{
  auto reps = sweep(s);
  return {std::move(reps.parent), std::move(reps.child)};
}

template <Element T>
GlobalParentRep compute_global_parent(Sequence<T> s)
{
  return std::move(sweep(s).global_parent);
}

template <Element T>
PatternRepresentations compute_representations(Sequence<T> s)
{
  return sweep(s);
}

template <Element T>
ParentDistanceRep compute_parent_distance(Sequence<T> s)
{
  const auto pp = compute_prefix_parent_child(s).parent;
  ParentDistanceRep pd;
  pd.values.resize(s.size());
  for (Position i = 1; i <= s.size(); ++i) {
    pd.values[i - 1] = pp(i) == i ? 0 : i - pp(i);
  }
  return pd;
}

template <Element T>
BitString compute_binary(Sequence<T> s)
{
  if (s.size() <= 1) {
    return BitString{};
  }
  BitString bits(s.size() - 1);
  for (std::size_t p = 0; p + 1 < s.size(); ++p) {
    bits.set(p, !earlier_precedes(s[p], s[p + 1]));
  }
  return bits;
}

#define CTM_INSTANTIATE(T)                                                         \
  template PrefixParentChild compute_prefix_parent_child<T>(Sequence<T>);          \
  template GlobalParentRep compute_global_parent<T>(Sequence<T>);                  \
  template PatternRepresentations compute_representations<T>(Sequence<T>);         \
  template ParentDistanceRep compute_parent_distance<T>(Sequence<T>);              \
  template BitString compute_binary<T>(Sequence<T>);

CTM_INSTANTIATE(std::int64_t)
CTM_INSTANTIATE(std::uint8_t)

#undef CTM_INSTANTIATE

} // namespace ctm
