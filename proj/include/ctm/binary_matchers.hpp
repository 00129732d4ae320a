// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_BINARY_MATCHERS_HPP
#define CTM_BINARY_MATCHERS_HPP

#include <memory>
#include <string>
#include <vector>

#include <ctm/bit_string.hpp>
#include <ctm/order.hpp>

namespace ctm {

  /// Exact matching over bit strings. find_all returns, in increasing order,
  /// every 1-based p with text[p..p+|pattern|-1] = pattern. An empty pattern
  /// occurs at all |text| + 1 positions.
  class BinaryMatcher {
  public:
    virtual ~BinaryMatcher() = default;

    [[nodiscard]] virtual std::vector<Position> find_all(
      const BitString& pattern, const BitString& text) const = 0;

    /// Short identifier, e.g. "bmh/q8".
    [[nodiscard]] virtual std::string name() const = 0;
  };

  /// Plain KMP over bits. Reference implementation of the contract.
  [[nodiscard]] std::vector<Position> binary_kmp(const BitString& pattern, const BitString& text);

  /// Horspool with a q-gram shift table of 2^q entries. 1 <= q <= 16 and
  /// q <= |pattern|, else std::invalid_argument("q-gram exceeds pattern").
  [[nodiscard]] std::vector<Position> horspool_q(const BitString& pattern, const BitString& text, unsigned q);

  /// Simplified backward nondeterministic DAWG matching reading a q-gram at a
  /// time. The pattern must fit in one 64-bit word; 1 <= q <= 16 and
  /// q <= |pattern|.
  [[nodiscard]] std::vector<Position> sbndm_q(const BitString& pattern, const BitString& text, unsigned q);

  /// Skip search with 2^q buckets of pattern q-gram positions, probing one
  /// text q-gram every |pattern| - q + 1 positions. 1 <= q <= 16 and
  /// q <= |pattern|.
  [[nodiscard]] std::vector<Position> skip_search_q(const BitString& pattern, const BitString& text, unsigned q);

  class KmpBitMatcher final : public BinaryMatcher {
  public:
    std::vector<Position> find_all(const BitString& pattern, const BitString& text) const override
    {
      return binary_kmp(pattern, text);
    }
    std::string name() const override { return "kmp"; }
  };

  class HorspoolMatcher final : public BinaryMatcher {
  public:
    explicit HorspoolMatcher(unsigned q) : q_(q) {}
    std::vector<Position> find_all(const BitString& pattern, const BitString& text) const override
    {
      return horspool_q(pattern, text, q_);
    }
    std::string name() const override { return "bmh/q" + std::to_string(q_); }

  private:
    unsigned q_;
  };

  class SbndmMatcher final : public BinaryMatcher {
  public:
    explicit SbndmMatcher(unsigned q) : q_(q) {}
    std::vector<Position> find_all(const BitString& pattern, const BitString& text) const override
    {
      return sbndm_q(pattern, text, q_);
    }
    std::string name() const override { return "sbndm/q" + std::to_string(q_); }

  private:
    unsigned q_;
  };

  class SkipSearchMatcher final : public BinaryMatcher {
  public:
    explicit SkipSearchMatcher(unsigned q) : q_(q) {}
    std::vector<Position> find_all(const BitString& pattern, const BitString& text) const override
    {
      return skip_search_q(pattern, text, q_);
    }
    std::string name() const override { return "sks/q" + std::to_string(q_); }

  private:
    unsigned q_;
  };

} // namespace ctm

#endif // CTM_BINARY_MATCHERS_HPP
