// SPDX-License-Identifier: Apache-2.0

#include <ctm/binary_matchers.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ctm {

namespace {

  std::vector<Position> every_position(const BitString& text)
  {
    std::vector<Position> all(text.size() + 1);
    std::iota(all.begin(), all.end(), Position{1});
    return all;
  }

  void check_gram(unsigned q, std::size_t pattern_length)
  {
    if (q == 0 || q > 16) {
      throw std::invalid_argument("q-gram size must be between 1 and 16");
    }
    if (q > pattern_length) {
      throw std::invalid_argument("q-gram exceeds pattern");
    }
  }

} // namespace

std::vector<Position> binary_kmp(const BitString& pattern, const BitString& text)
{
  const std::size_t m = pattern.size();
  if (m == 0) {
    return every_position(text);
  }
  std::vector<Position> out;
  if (m > text.size()) {
    return out;
  }
  // border[k] = length of the longest proper border of pattern[0..k).
  std::vector<std::size_t> border(m + 1, 0);
  for (std::size_t k = 1, b = 0; k < m; ++k) {
    while (b > 0 && pattern.test(k) != pattern.test(b)) {
      b = border[b];
    }
    if (pattern.test(k) == pattern.test(b)) {
      ++b;
    }
    border[k + 1] = b;
  }
  std::size_t matched = 0;
  for (std::size_t t = 0; t < text.size(); ++t) {
    const bool bit = text.test(t);
    while (matched > 0 && bit != pattern.test(matched)) {
      matched = border[matched];
    }
    if (bit == pattern.test(matched)) {
      ++matched;
    }
    if (matched == m) {
      out.push_back(t + 2 - m);
      matched = border[m];
    }
  }
  return out;
}

std::vector<Position> horspool_q(const BitString& pattern, const BitString& text, unsigned q)
{
  const std::size_t m = pattern.size();
  if (m == 0) {
    return every_position(text);
  }
  check_gram(q, m);
  std::vector<Position> out;
  const std::size_t n = text.size();
  if (m > n) {
    return out;
  }

  // shift[v]: distance from the last pattern q-gram equal to v (excluding the
  // final one) to the pattern end.
  std::vector<std::uint32_t> shift(std::size_t{1} << q, static_cast<std::uint32_t>(m - q + 1));
  for (std::size_t end = q - 1; end + 1 < m; ++end) {
    shift[pattern.gram(end + 1 - q, q)] = static_cast<std::uint32_t>(m - 1 - end);
  }
  const std::uint64_t last = pattern.gram(m - q, q);

  for (std::size_t end = m - 1; end < n;) {
    const std::uint64_t v = text.gram(end + 1 - q, q);
    if (v == last && text.equal_range(end + 1 - m, pattern, 0, m)) {
      out.push_back(end + 2 - m);
    }
    end += shift[v];
  }
  return out;
}

std::vector<Position> sbndm_q(const BitString& pattern, const BitString& text, unsigned q)
{
  const std::size_t m = pattern.size();
  if (m == 0) {
    return every_position(text);
  }
  if (m > 64) {
    throw std::invalid_argument("sbndm: pattern exceeds the 64-bit word; use bmh, sks or kmp instead");
  }
  check_gram(q, m);
  std::vector<Position> out;
  const std::size_t n = text.size();
  if (m > n) {
    return out;
  }

  // Bit k of mask[c] is set iff pattern[m-1-k] == c.
  std::uint64_t mask[2] = {0, 0};
  for (std::size_t k = 0; k < m; ++k) {
    mask[pattern.test(m - 1 - k)] |= std::uint64_t{1} << k;
  }
  // State of the factor automaton after reading a whole q-gram, indexed by
  // the gram value; bit k of the gram is the k-th symbol from its start.
  std::vector<std::uint64_t> gram_state(std::size_t{1} << q);
  for (std::size_t v = 0; v < gram_state.size(); ++v) {
    std::uint64_t d = ~std::uint64_t{0};
    for (unsigned k = 0; k < q; ++k) {
      d &= mask[(v >> k) & 1u] >> (q - 1 - k);
    }
    gram_state[v] = d;
  }

  const std::size_t skip = m - q + 1;
  for (std::size_t end = m - 1; end < n;) {
    std::uint64_t d = gram_state[text.gram(end + 1 - q, q)];
    if (d == 0) {
      end += skip;
      continue;
    }
    // Extend the recognised factor text[start..end] leftwards.
    std::size_t start = end + 1 - q;
    std::size_t length = q;
    while (length < m) {
      d &= mask[text.test(start - 1)] >> length;
      if (d == 0) {
        break;
      }
      --start;
      ++length;
    }
    if (length == m) {
      out.push_back(start + 1);
      end += 1;
    } else {
      end = start + m - 1;
    }
  }
  return out;
}

std::vector<Position> skip_search_q(const BitString& pattern, const BitString& text, unsigned q)
{
  const std::size_t m = pattern.size();
  if (m == 0) {
    return every_position(text);
  }
  check_gram(q, m);
  std::vector<Position> out;
  const std::size_t n = text.size();
  if (m > n) {
    return out;
  }

  // Buckets in CSR form; within a bucket pattern offsets are stored in
  // decreasing order so that reported text positions come out sorted.
  const std::size_t grams = m - q + 1;
  std::vector<std::uint32_t> head((std::size_t{1} << q) + 1, 0);
  for (std::size_t i = 0; i < grams; ++i) {
    ++head[pattern.gram(i, q) + 1];
  }
  std::partial_sum(head.begin(), head.end(), head.begin());
  std::vector<std::uint32_t> offsets(grams);
  {
    std::vector<std::uint32_t> fill(head.begin(), head.end() - 1);
    for (std::size_t i = grams; i-- > 0;) {
      offsets[fill[pattern.gram(i, q)]++] = static_cast<std::uint32_t>(i);
    }
  }

  for (std::size_t probe = m - q; probe + q <= n; probe += grams) {
    const std::uint64_t v = text.gram(probe, q);
    for (std::uint32_t slot = head[v]; slot < head[v + 1]; ++slot) {
      const std::size_t start = probe - offsets[slot];
      if (start + m <= n && text.equal_range(start, pattern, 0, m)) {
        out.push_back(start + 1);
      }
    }
  }
  return out;
}

} // namespace ctm
