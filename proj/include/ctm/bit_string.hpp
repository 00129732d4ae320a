// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_BIT_STRING_HPP
#define CTM_BIT_STRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <ctm/order.hpp>

namespace ctm {

  /// Packed bit string. Bit p (0-based) lives in word p / 64 at bit p % 64, so
  /// the lowest position sits in the least significant bit of each word. One
  /// extra zero word is kept at the end so that 64-bit reads starting at any
  /// valid position never leave the buffer.
  class BitString {
  public:
    BitString() : words_(1, 0) {}

    explicit BitString(std::size_t length)
      : words_(length / 64 + 2, 0), length_(length) {}

    /// Parses a string of '0' and '1' characters; position 1 is the first
    /// character.
    static BitString from_string(std::string_view bits);

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

    /// 1-based access, as in the published definitions.
    [[nodiscard]] bool operator()(Position i) const noexcept { return test(i - 1); }

    /// 0-based access.
    [[nodiscard]] bool test(std::size_t p) const noexcept
    {
      return (words_[p >> 6] >> (p & 63)) & 1u;
    }

    void set(std::size_t p, bool value) noexcept
    {
      const std::uint64_t mask = std::uint64_t{1} << (p & 63);
      if (value) {
        words_[p >> 6] |= mask;
      } else {
        words_[p >> 6] &= ~mask;
      }
    }

    /// Reads `count` (1..64) bits starting at 0-based position p; bit k of
    /// the result is position p + k. Requires p + count <= size().
    [[nodiscard]] std::uint64_t extract(std::size_t p, unsigned count) const noexcept
    {
      const std::size_t w = p >> 6;
      const unsigned shift = p & 63;
      std::uint64_t v = words_[w] >> shift;
      if (shift != 0) {
        v |= words_[w + 1] << (64 - shift);
      }
      return count == 64 ? v : v & ((std::uint64_t{1} << count) - 1);
    }

    /// Integer value of the q-gram at 0-based position p: sum of
    /// bit[p + k] * 2^k for k < q.
    [[nodiscard]] std::uint64_t gram(std::size_t p, unsigned q) const noexcept
    {
      return extract(p, q);
    }

    /// Writes `count` (1..64) low bits of `bits` at 0-based position p.
    void deposit(std::size_t p, std::uint64_t bits, unsigned count) noexcept;

    /// True iff the `length` bits at 0-based offset p equal those of
    /// `other` starting at its 0-based offset `other_p`.
    [[nodiscard]] bool equal_range(
      std::size_t p, const BitString& other, std::size_t other_p, std::size_t length) const noexcept;

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitString& a, const BitString& b) noexcept
    {
      return a.length_ == b.length_ && a.equal_range(0, b, 0, a.length_);
    }

  private:
    std::vector<std::uint64_t> words_;
    std::size_t length_ = 0;
  };

} // namespace ctm

#endif // CTM_BIT_STRING_HPP
