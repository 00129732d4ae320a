// SPDX-License-Identifier: Apache-2.0

#include <ctm/lanes.hpp>

#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#define CTM_X86 1
#include <immintrin.h>
#endif

namespace ctm {

namespace {

  template <Element T>
  std::uint32_t scan_block_scalar(const T* p) noexcept
  {
    std::uint32_t bits = 0;
    for (unsigned k = 0; k < lane_count<T>; ++k) {
      bits |= static_cast<std::uint32_t>(later_precedes(p[k + 1], p[k])) << k;
    }
    return bits;
  }

  std::uint32_t greater_mask16_scalar(const std::uint8_t* a, const std::uint8_t* b) noexcept
  {
    std::uint32_t bits = 0;
    for (unsigned j = 0; j < 16; ++j) {
      bits |= static_cast<std::uint32_t>(a[j] > b[j]) << j;
    }
    return bits;
  }

#ifdef CTM_X86

  // SSE2 has only a signed byte compare; flipping the top bit maps unsigned
  // order onto signed order.
  inline std::uint32_t greater_mask16_sse2(const std::uint8_t* a, const std::uint8_t* b) noexcept
  {
    const __m128i bias = _mm_set1_epi8(static_cast<char>(0x80));
    const __m128i va = _mm_xor_si128(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a)), bias);
    const __m128i vb = _mm_xor_si128(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b)), bias);
    return static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpgt_epi8(va, vb)));
  }

  __attribute__((target("avx2"))) std::uint32_t scan_block_avx2(const std::int64_t* p) noexcept
  {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 1));
    return static_cast<std::uint32_t>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(a, b))));
  }

  // Four blocks per iteration, 16 bits of the binary representation.
  __attribute__((target("avx2"))) void binary_avx2(
    const std::int64_t* s, std::size_t n, BitString& out, std::size_t& done) noexcept
  {
    std::size_t p = 0;
    for (; p + 16 < n; p += 16) {
      std::uint64_t bits = 0;
      for (unsigned k = 0; k < 4; ++k) {
        bits |= static_cast<std::uint64_t>(scan_block_avx2(s + p + 4 * k)) << (4 * k);
      }
      out.deposit(p, bits, 16);
    }
    done = p;
  }

  void binary_sse2(const std::uint8_t* s, std::size_t n, BitString& out, std::size_t& done) noexcept
  {
    std::size_t p = 0;
    for (; p + 64 < n; p += 64) {
      std::uint64_t bits = 0;
      for (unsigned k = 0; k < 4; ++k) {
        bits |= static_cast<std::uint64_t>(greater_mask16_sse2(s + p + 16 * k, s + p + 16 * k + 1)) << (16 * k);
      }
      out.deposit(p, bits, 64);
    }
    for (; p + 16 < n; p += 16) {
      out.deposit(p, greater_mask16_sse2(s + p, s + p + 1), 16);
    }
    done = p;
  }

  bool cpu_has_avx2() noexcept
  {
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
  }

#endif

} // namespace

template <>
bool native_lanes_available<std::uint8_t>() noexcept
{
#ifdef CTM_X86
  return true;
#else
  return false;
#endif
}

template <>
bool native_lanes_available<std::int64_t>() noexcept
{
#ifdef CTM_X86
  return cpu_has_avx2();
#else
  return false;
#endif
}

template <Element T>
std::uint32_t packed_binary_scan(Sequence<T> text, Position i, LaneBackend backend)
{
  if (i == 0 || i + lane_count<T> > text.size()) {
    throw std::out_of_range("packed_binary_scan: block extends past the end of the text");
  }
  const T* p = text.data() + (i - 1);
#ifdef CTM_X86
  if (backend == LaneBackend::native && native_lanes_available<T>()) {
    if constexpr (sizeof(T) == 1) {
      return greater_mask16_sse2(p, p + 1);
    } else {
      return scan_block_avx2(p);
    }
  }
#else
  (void)backend;
#endif
  return scan_block_scalar(p);
}

template <Element T>
BitString compute_binary(Sequence<T> text, LaneBackend backend)
{
  const std::size_t n = text.size();
  if (n <= 1) {
    return BitString{};
  }
  BitString bits(n - 1);
  std::size_t p = 0;
#ifdef CTM_X86
  if (backend == LaneBackend::native && native_lanes_available<T>()) {
    if constexpr (sizeof(T) == 1) {
      binary_sse2(text.data(), n, bits, p);
    } else {
      binary_avx2(text.data(), n, bits, p);
    }
  }
#else
  (void)backend;
#endif
  for (; p + lane_count<T> < n; p += lane_count<T>) {
    bits.deposit(p, scan_block_scalar(text.data() + p), lane_count<T>);
  }
  for (; p + 1 < n; ++p) {
    bits.set(p, later_precedes(text[p + 1], text[p]));
  }
  return bits;
}

std::uint32_t greater_mask16(const std::uint8_t* a, const std::uint8_t* b, LaneBackend backend) noexcept
{
#ifdef CTM_X86
  if (backend == LaneBackend::native) {
    return greater_mask16_sse2(a, b);
  }
#else
  (void)backend;
#endif
  return greater_mask16_scalar(a, b);
}

template std::uint32_t packed_binary_scan<std::int64_t>(Sequence<std::int64_t>, Position, LaneBackend);
template std::uint32_t packed_binary_scan<std::uint8_t>(Sequence<std::uint8_t>, Position, LaneBackend);
template BitString compute_binary<std::int64_t>(Sequence<std::int64_t>, LaneBackend);
template BitString compute_binary<std::uint8_t>(Sequence<std::uint8_t>, LaneBackend);

} // namespace ctm
