// SPDX-License-Identifier: Apache-2.0

#include <ctm/dataset.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ctm {

std::size_t text_size(const TextData& text) noexcept
{
  return std::visit([](const auto& v) { return v.size(); }, text);
}

std::vector<std::int64_t> generate_temperature_like(std::uint64_t seed, std::size_t length)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> noise(-2, 2);
  std::vector<std::int64_t> out(length);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t t = 0; t < length; ++t) {
    const double day = static_cast<double>(t / 24);
    const double hour = static_cast<double>(t % 24);
    const double seasonal = 12.5 + 14.0 * std::sin(two_pi * (day - 105.0) / 365.25);
    const double diurnal = -4.5 * std::cos(two_pi * (hour - 4.0) / 24.0);
    out[t] = std::llround(10.0 * (seasonal + diurnal)) + noise(rng);
  }
  return out;
}

TextData generate_dataset(const DatasetSpec& spec)
{
  if (spec.length == 0) {
    throw std::invalid_argument("dataset length must be at least 1");
  }
  std::mt19937_64 rng(spec.seed);
  switch (spec.kind) {
  case DatasetKind::random_byte: {
    std::uniform_int_distribution<unsigned> dist(0, 255);
    std::vector<std::uint8_t> out(spec.length);
    for (auto& v : out) {
      v = static_cast<std::uint8_t>(dist(rng));
    }
    return out;
  }
  case DatasetKind::random_int: {
    std::int64_t lo = std::numeric_limits<std::int32_t>::min();
    std::int64_t hi = std::numeric_limits<std::int32_t>::max();
    if (spec.int_range) {
      if (*spec.int_range == 0 || *spec.int_range > (std::uint64_t{1} << 62)) {
        throw std::invalid_argument("integer range must be in [1, 2^62]");
      }
      lo = 0;
      hi = static_cast<std::int64_t>(*spec.int_range) - 1;
    }
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<std::int64_t> out(spec.length);
    for (auto& v : out) {
      v = dist(rng);
    }
    return out;
  }
  case DatasetKind::temperature_like:
    return generate_temperature_like(spec.seed, spec.length);
  }
  throw std::invalid_argument("unknown dataset kind");
}

std::optional<DatasetKind> parse_dataset_kind(std::string_view name) noexcept
{
  if (name == "random-int") {
    return DatasetKind::random_int;
  }
  if (name == "random-byte") {
    return DatasetKind::random_byte;
  }
  if (name == "temp-like" || name == "temperature-like") {
    return DatasetKind::temperature_like;
  }
  return std::nullopt;
}

std::vector<std::int64_t> read_int_lines(std::istream& in)
{
  std::vector<std::int64_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    if (*begin == '+') {
      ++begin;
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": not an integer: '" + line + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<std::uint8_t> read_bytes(std::istream& in)
{
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TextData read_text_file(const std::string& path, FileFormat format)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  if (format == FileFormat::bytes) {
    return read_bytes(in);
  }
  return read_int_lines(in);
}

} // namespace ctm
