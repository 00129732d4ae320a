// SPDX-License-Identifier: Apache-2.0

#include <ctm/bit_string.hpp>

#include <stdexcept>

namespace ctm {

BitString BitString::from_string(std::string_view bits)
{
  BitString out(bits.size());
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p] == '1') {
      out.set(p, true);
    } else if (bits[p] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

void BitString::deposit(std::size_t p, std::uint64_t bits, unsigned count) noexcept
{
  if (count < 64) {
    bits &= (std::uint64_t{1} << count) - 1;
  }
  const std::size_t w = p >> 6;
  const unsigned shift = p & 63;
  const std::uint64_t mask = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  words_[w] = (words_[w] & ~(mask << shift)) | (bits << shift);
  if (shift != 0 && shift + count > 64) {
    const unsigned spill = 64 - shift;
    words_[w + 1] = (words_[w + 1] & ~(mask >> spill)) | (bits >> spill);
  }
}

bool BitString::equal_range(
  std::size_t p, const BitString& other, std::size_t other_p, std::size_t length) const noexcept
{
  std::size_t off = 0;
  while (off + 64 <= length) {
    if (extract(p + off, 64) != other.extract(other_p + off, 64)) {
      return false;
    }
    off += 64;
  }
  if (off < length) {
    const auto rest = static_cast<unsigned>(length - off);
    return extract(p + off, rest) == other.extract(other_p + off, rest);
  }
  return true;
}

std::string BitString::to_string() const
{
  std::string out(length_, '0');
  for (std::size_t p = 0; p < length_; ++p) {
    if (test(p)) {
      out[p] = '1';
    }
  }
  return out;
}

} // namespace ctm
