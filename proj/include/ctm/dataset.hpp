// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_DATASET_HPP
#define CTM_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctm {

  enum class DatasetKind { random_int, random_byte, temperature_like };

  /// Generated text description. Regenerating the same spec always yields the
  /// same data.
  struct DatasetSpec {
    DatasetKind kind = DatasetKind::random_byte;
    std::uint64_t seed = 1;
    std::size_t length = 0;
    /// random_int only: draw from [0, int_range) instead of the full signed
    /// 32-bit range.
    std::optional<std::uint64_t> int_range;

    /// Bytes per element of the generated sequence.
    [[nodiscard]] std::size_t element_width() const noexcept
    {
      return kind == DatasetKind::random_byte ? 1 : 8;
    }
  };

  /// Text in either element domain.
  using TextData = std::variant<std::vector<std::int64_t>, std::vector<std::uint8_t>>;

  [[nodiscard]] std::size_t text_size(const TextData& text) noexcept;

  /// Throws std::invalid_argument when length is 0.
  [[nodiscard]] TextData generate_dataset(const DatasetSpec& spec);

  /// Synthetic hourly temperature series in tenths of a degree: a seasonal
  /// sinusoid over 365.25 days, a diurnal sinusoid with its trough at 04:00
  /// and crest at 16:00, and uniform integer noise of +-2 tenths.
  [[nodiscard]] std::vector<std::int64_t> generate_temperature_like(std::uint64_t seed, std::size_t length);

  /// Hours of the day (t mod 24) during which the diurnal component rises.
  [[nodiscard]] constexpr bool temperature_rising_hour(std::size_t hour) noexcept
  {
    return hour >= 4 && hour < 16;
  }

  [[nodiscard]] std::optional<DatasetKind> parse_dataset_kind(std::string_view name) noexcept;

  /// Newline-delimited decimal integers. Blank lines are skipped; anything
  /// else that is not an integer throws std::runtime_error naming the line.
  [[nodiscard]] std::vector<std::int64_t> read_int_lines(std::istream& in);

  /// Raw bytes, one element per byte.
  [[nodiscard]] std::vector<std::uint8_t> read_bytes(std::istream& in);

  enum class FileFormat { int_lines, bytes };

  /// Throws std::runtime_error if the file cannot be opened.
  [[nodiscard]] TextData read_text_file(const std::string& path, FileFormat format);

} // namespace ctm

#endif // CTM_DATASET_HPP
