// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_BENCH_HPP
#define CTM_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <ctm/dataset.hpp>
#include <ctm/order.hpp>

namespace ctm {

  /// Invalid algorithm, q or pattern length combination.
  class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// Two algorithms reported different occurrences for the same input.
  class AgreementError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  enum class Algorithm { kmpct_baseline, ikmpct, filter_kmp, filter_sbndm, filter_bmh, filter_sks, packed };

  struct AlgorithmChoice {
    Algorithm algorithm = Algorithm::ikmpct;
    unsigned q = 0; // filtration matchers other than kmp only

    /// e.g. "ikmpct", "filter:bmh/q8".
    [[nodiscard]] std::string id() const;

    friend bool operator==(const AlgorithmChoice&, const AlgorithmChoice&) = default;
  };

  /// Accepts the ids kmpct-baseline, ikmpct, filter:kmp, filter:bmh,
  /// filter:sbndm, filter:sks and packed. bmh and sks default to q = 8,
  /// sbndm to q = 4. Throws UsageError.
  [[nodiscard]] AlgorithmChoice parse_algorithm(std::string_view id, std::optional<unsigned> q = std::nullopt);

  /// Throws UsageError if the choice cannot run on a pattern of length m.
  void validate(const AlgorithmChoice& choice, std::size_t m);

  /// Every algorithm and q of the benchmark table that can run on patterns
  /// of length m: sbndm q in {2,4,6}, bmh and sks q in {4,8,12,16} (q <= m-1
  /// throughout), packed for m <= 16 on byte text.
  [[nodiscard]] std::vector<AlgorithmChoice> table_roster(std::size_t m, bool byte_text);

  struct AlgorithmResult {
    MatchSet matches;
    std::optional<std::size_t> candidates;
    std::optional<std::uint64_t> comparisons;
  };

  /// Runs one algorithm. `instrument` counts element comparisons for ikmpct.
  /// The packed matcher accepts integer data only if every value fits a byte.
  template <Element T>
  [[nodiscard]] AlgorithmResult run_algorithm(
    const AlgorithmChoice& choice, Sequence<T> pattern, Sequence<T> text, bool instrument = false);

  /// Summary of one algorithm over all patterns of one length.
  struct RunReport {
    std::string algorithm;
    std::size_t pattern_length = 0;
    std::size_t trials = 0;
    std::size_t match_count = 0;
    double seconds = 0.0;
    std::optional<std::size_t> candidates;
    std::optional<std::uint64_t> comparisons;
    std::vector<std::size_t> per_pattern_matches;
    std::vector<std::uint64_t> per_pattern_digest; // hash of each match set
  };

  /// Patterns of length m copied from random offsets of the text.
  [[nodiscard]] std::vector<TextData> sample_patterns(
    const TextData& text, std::size_t m, std::size_t trials, std::uint64_t seed);

  /// Runs `choice` over every pattern. Throws UsageError for invalid
  /// combinations (including patterns of mixed length).
  [[nodiscard]] RunReport run(
    const TextData& text, const std::vector<TextData>& patterns, const AlgorithmChoice& choice,
    bool instrument = false);

  struct BenchConfig {
    std::vector<std::size_t> pattern_lengths;
    std::vector<AlgorithmChoice> algorithms; // empty: table_roster per length
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    bool instrument = false;
    bool verify_oracle = false;
  };

  /// Texts up to this many element-window products are cross-checked against
  /// the naive matcher when verify_oracle is set.
  inline constexpr std::size_t oracle_work_limit = 50'000'000;

  /// One report per (length, algorithm). Lengths longer than the text give
  /// zero-match reports. Throws AgreementError when the algorithms (or the
  /// oracle, if enabled) disagree on any pattern.
  [[nodiscard]] std::vector<RunReport> bench(const TextData& text, const BenchConfig& config);

  /// Aligned table: one row per pattern length, one column per algorithm,
  /// timings in seconds.
  void print_table(std::ostream& out, const std::vector<RunReport>& reports);

  /// One line per report. With include_timing = false the seconds column is
  /// left empty, which makes output byte-identical across runs.
  void print_csv(std::ostream& out, const std::vector<RunReport>& reports, bool include_timing = true);

} // namespace ctm

#endif // CTM_BENCH_HPP
