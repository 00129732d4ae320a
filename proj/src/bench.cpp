// SPDX-License-Identifier: Apache-2.0

#include <ctm/bench.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include <ctm/filtration.hpp>
#include <ctm/kmp_matcher.hpp>
#include <ctm/oracle.hpp>
#include <ctm/packed_matcher.hpp>

namespace ctm {

namespace {

  bool uses_q(Algorithm a) noexcept
  {
    return a == Algorithm::filter_bmh || a == Algorithm::filter_sbndm || a == Algorithm::filter_sks;
  }

  std::unique_ptr<BinaryMatcher> make_matcher(const AlgorithmChoice& choice)
  {
    switch (choice.algorithm) {
    case Algorithm::filter_kmp:
      return std::make_unique<KmpBitMatcher>();
    case Algorithm::filter_bmh:
      return std::make_unique<HorspoolMatcher>(choice.q);
    case Algorithm::filter_sbndm:
      return std::make_unique<SbndmMatcher>(choice.q);
    case Algorithm::filter_sks:
      return std::make_unique<SkipSearchMatcher>(choice.q);
    default:
      return nullptr;
    }
  }

  std::uint64_t digest(const MatchSet& matches) noexcept
  {
    std::uint64_t h = 1469598103934665603ull;
    for (const Position p : matches) {
      h = (h ^ p) * 1099511628211ull;
    }
    return h ^ matches.size();
  }

  std::optional<std::vector<std::uint8_t>> narrow_to_bytes(Sequence<std::int64_t> s)
  {
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (const auto v : s) {
      if (v < 0 || v > 255) {
        return std::nullopt;
      }
      out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
  }

  // Table columns follow the roster: algorithm family, then q.
  std::pair<std::size_t, unsigned> column_key(const std::string& id)
  {
    static const std::string_view order[] = {
      "kmpct-baseline", "ikmpct", "filter:kmp", "filter:sbndm", "filter:bmh", "filter:sks", "packed"};
    const auto slash = id.find("/q");
    const std::string_view base = std::string_view(id).substr(0, slash);
    const unsigned q = slash == std::string::npos ? 0 : static_cast<unsigned>(std::stoul(id.substr(slash + 2)));
    const auto it = std::find(std::begin(order), std::end(order), base);
    return {static_cast<std::size_t>(it - std::begin(order)), q};
  }

} // namespace

std::string AlgorithmChoice::id() const
{
  switch (algorithm) {
  case Algorithm::kmpct_baseline:
    return "kmpct-baseline";
  case Algorithm::ikmpct:
    return "ikmpct";
  case Algorithm::filter_kmp:
    return "filter:kmp";
  case Algorithm::filter_sbndm:
    return "filter:sbndm/q" + std::to_string(q);
  case Algorithm::filter_bmh:
    return "filter:bmh/q" + std::to_string(q);
  case Algorithm::filter_sks:
    return "filter:sks/q" + std::to_string(q);
  case Algorithm::packed:
    return "packed";
  }
  return "?";
}

AlgorithmChoice parse_algorithm(std::string_view id, std::optional<unsigned> q)
{
  static const std::map<std::string_view, std::pair<Algorithm, unsigned>> known = {
    {"kmpct-baseline", {Algorithm::kmpct_baseline, 0}},
    {"ikmpct", {Algorithm::ikmpct, 0}},
    {"filter:kmp", {Algorithm::filter_kmp, 0}},
    {"filter:sbndm", {Algorithm::filter_sbndm, 4}},
    {"filter:bmh", {Algorithm::filter_bmh, 8}},
    {"filter:sks", {Algorithm::filter_sks, 8}},
    {"packed", {Algorithm::packed, 0}},
  };
  const auto it = known.find(id);
  if (it == known.end()) {
    throw UsageError("unknown algorithm '" + std::string(id) + "'");
  }
  AlgorithmChoice choice{it->second.first, it->second.second};
  if (q) {
    if (!uses_q(choice.algorithm)) {
      throw UsageError("--q applies only to filter:sbndm, filter:bmh and filter:sks");
    }
    if (*q == 0 || *q > 16) {
      throw UsageError("q must be between 1 and 16");
    }
    choice.q = *q;
  }
  return choice;
}

void validate(const AlgorithmChoice& choice, std::size_t m)
{
  if (m == 0) {
    throw UsageError("pattern must be non-empty");
  }
  const std::string id = choice.id();
  if (uses_q(choice.algorithm) && m > 1 && choice.q > m - 1) {
    throw UsageError(id + ": q-gram exceeds the pattern's binary representation (m - 1 = " +
      std::to_string(m - 1) + ")");
  }
  if (choice.algorithm == Algorithm::filter_sbndm && m - 1 > 64) {
    throw UsageError(id + ": pattern binary representation exceeds 64 bits");
  }
  if (choice.algorithm == Algorithm::packed && m > packed_max_pattern) {
    throw UsageError("packed: pattern too long for packed matcher (m > 16)");
  }
}

std::vector<AlgorithmChoice> table_roster(std::size_t m, bool byte_text)
{
  std::vector<AlgorithmChoice> roster = {
    {Algorithm::kmpct_baseline, 0}, {Algorithm::ikmpct, 0}, {Algorithm::filter_kmp, 0}};
  const std::size_t bits = m > 0 ? m - 1 : 0;
  for (const unsigned q : {2u, 4u, 6u}) {
    if (q <= bits && bits <= 64) {
      roster.push_back({Algorithm::filter_sbndm, q});
    }
  }
  for (const Algorithm a : {Algorithm::filter_bmh, Algorithm::filter_sks}) {
    for (const unsigned q : {4u, 8u, 12u, 16u}) {
      if (q <= bits) {
        roster.push_back({a, q});
      }
    }
  }
  if (byte_text && m <= packed_max_pattern) {
    roster.push_back({Algorithm::packed, 0});
  }
  return roster;
}

template <Element T>
AlgorithmResult run_algorithm(const AlgorithmChoice& choice, Sequence<T> pattern, Sequence<T> text, bool instrument)
{
  validate(choice, pattern.size());
  AlgorithmResult result;
  switch (choice.algorithm) {
  case Algorithm::kmpct_baseline:
    result.matches = baseline_pd_search(pattern, text);
    break;
  case Algorithm::ikmpct: {
    const auto model = build_pattern_model(pattern);
    if (instrument) {
      ComparisonCounter counter;
      result.matches = search(model, text, counter);
      result.comparisons = counter.comparisons;
    } else {
      result.matches = search(model, text);
    }
    break;
  }
  case Algorithm::filter_kmp:
  case Algorithm::filter_sbndm:
  case Algorithm::filter_bmh:
  case Algorithm::filter_sks: {
    const auto matcher = make_matcher(choice);
    auto filtered = filtered_search_with_stats(pattern, text, *matcher);
    result.matches = std::move(filtered.matches);
    result.candidates = filtered.candidates;
    break;
  }
  case Algorithm::packed:
    if constexpr (std::is_same_v<T, std::uint8_t>) {
      result.matches = packed_search(pattern, text);
    } else {
      const auto p = narrow_to_bytes(pattern);
      const auto t = narrow_to_bytes(text);
      if (!p || !t) {
        throw UsageError("packed: requires byte data (every value in 0..255)");
      }
      result.matches = packed_search(*p, *t);
    }
    break;
  }
  return result;
}

std::vector<TextData> sample_patterns(const TextData& text, std::size_t m, std::size_t trials, std::uint64_t seed)
{
  std::vector<TextData> patterns;
  const std::size_t n = text_size(text);
  if (m == 0 || m > n) {
    return patterns;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> offset(0, n - m);
  patterns.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t at = offset(rng);
    patterns.push_back(std::visit(
      [&](const auto& v) -> TextData {
        return std::decay_t<decltype(v)>(v.begin() + static_cast<std::ptrdiff_t>(at),
          v.begin() + static_cast<std::ptrdiff_t>(at + m));
      },
      text));
  }
  return patterns;
}

RunReport run(const TextData& text, const std::vector<TextData>& patterns, const AlgorithmChoice& choice, bool instrument)
{
  RunReport report;
  report.algorithm = choice.id();
  report.trials = patterns.size();
  if (!patterns.empty()) {
    report.pattern_length = text_size(patterns.front());
  }
  if (uses_q(choice.algorithm) || choice.algorithm == Algorithm::filter_kmp) {
    report.candidates = 0;
  }
  if (instrument && choice.algorithm == Algorithm::ikmpct) {
    report.comparisons = 0;
  }

  std::chrono::steady_clock::duration elapsed{};
  for (const auto& pattern : patterns) {
    if (pattern.index() != text.index()) {
      throw UsageError("pattern and text must have the same element type");
    }
    if (text_size(pattern) != report.pattern_length) {
      throw UsageError("all patterns of one run must have the same length");
    }
    const auto result = std::visit(
      [&](const auto& t) {
        using Vec = std::decay_t<decltype(t)>;
        using T = typename Vec::value_type;
        const auto& p = std::get<Vec>(pattern);
        const auto start = std::chrono::steady_clock::now();
        auto r = run_algorithm<T>(choice, Sequence<T>(p), Sequence<T>(t), instrument);
        elapsed += std::chrono::steady_clock::now() - start;
        return r;
      },
      text);
    report.match_count += result.matches.size();
    report.per_pattern_matches.push_back(result.matches.size());
    report.per_pattern_digest.push_back(digest(result.matches));
    if (result.candidates) {
      *report.candidates += *result.candidates;
    }
    if (result.comparisons) {
      *report.comparisons += *result.comparisons;
    }
  }
  report.seconds = std::chrono::duration<double>(elapsed).count();
  return report;
}

std::vector<RunReport> bench(const TextData& text, const BenchConfig& config)
{
  const bool byte_text = std::holds_alternative<std::vector<std::uint8_t>>(text);
  const std::size_t n = text_size(text);
  std::vector<RunReport> reports;

  for (const std::size_t m : config.pattern_lengths) {
    const auto roster = config.algorithms.empty() ? table_roster(m, byte_text) : config.algorithms;
    for (const auto& choice : roster) {
      validate(choice, m);
    }
    // Per-length seed so adding a length does not change the others.
    const auto patterns = sample_patterns(text, m, config.trials, config.seed * 1000003u + m);

    const std::size_t first = reports.size();
    for (const auto& choice : roster) {
      auto report = run(text, patterns, choice, config.instrument);
      report.pattern_length = m;
      reports.push_back(std::move(report));
    }

    for (std::size_t r = first + 1; r < reports.size(); ++r) {
      if (reports[r].per_pattern_digest != reports[first].per_pattern_digest) {
        std::ostringstream msg;
        msg << "algorithms disagree for m = " << m << ": " << reports[first].algorithm << " found "
            << reports[first].match_count << " matches, " << reports[r].algorithm << " found "
            << reports[r].match_count;
        throw AgreementError(msg.str());
      }
    }

    if (config.verify_oracle && reports.size() > first && n * m <= oracle_work_limit) {
      for (std::size_t k = 0; k < patterns.size(); ++k) {
        const auto expected = std::visit(
          [&](const auto& t) {
            using Vec = std::decay_t<decltype(t)>;
            using T = typename Vec::value_type;
            return oracle::naive_match<T>(Sequence<T>(t), Sequence<T>(std::get<Vec>(patterns[k])));
          },
          text);
        if (digest(expected) != reports[first].per_pattern_digest[k]) {
          std::ostringstream msg;
          msg << "oracle disagrees for m = " << m << ", pattern " << k + 1 << ": naive match found "
              << expected.size() << " matches, " << reports[first].algorithm << " found "
              << reports[first].per_pattern_matches[k];
          throw AgreementError(msg.str());
        }
      }
    }
  }
  return reports;
}

void print_table(std::ostream& out, const std::vector<RunReport>& reports)
{
  std::vector<std::string> columns;
  std::vector<std::size_t> lengths;
  for (const auto& r : reports) {
    if (std::find(columns.begin(), columns.end(), r.algorithm) == columns.end()) {
      columns.push_back(r.algorithm);
    }
    if (std::find(lengths.begin(), lengths.end(), r.pattern_length) == lengths.end()) {
      lengths.push_back(r.pattern_length);
    }
  }
  std::stable_sort(columns.begin(), columns.end(), [](const std::string& a, const std::string& b) {
    return column_key(a) < column_key(b);
  });
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = std::max<std::size_t>(columns[c].size(), 8);
  }

  out << std::setw(5) << "m" << std::setw(10) << "matches";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << "  " << std::setw(static_cast<int>(width[c])) << columns[c];
  }
  out << '\n';
  for (const std::size_t m : lengths) {
    std::size_t matches = 0;
    for (const auto& r : reports) {
      if (r.pattern_length == m) {
        matches = r.match_count;
        break;
      }
    }
    out << std::setw(5) << m << std::setw(10) << matches;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto it = std::find_if(reports.begin(), reports.end(), [&](const RunReport& r) {
        return r.pattern_length == m && r.algorithm == columns[c];
      });
      out << "  " << std::setw(static_cast<int>(width[c]));
      if (it == reports.end()) {
        out << "";
      } else {
        std::ostringstream cell;
        cell << std::fixed << std::setprecision(4) << it->seconds;
        out << cell.str();
      }
    }
    out << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<RunReport>& reports, bool include_timing)
{
  out << "m,algorithm,trials,matches,candidates,comparisons,seconds\n";
  for (const auto& r : reports) {
    out << r.pattern_length << ',' << r.algorithm << ',' << r.trials << ',' << r.match_count << ',';
    if (r.candidates) {
      out << *r.candidates;
    }
    out << ',';
    if (r.comparisons) {
      out << *r.comparisons;
    }
    out << ',';
    if (include_timing) {
      std::ostringstream cell;
      cell << std::fixed << std::setprecision(6) << r.seconds;
      out << cell.str();
    }
    out << '\n';
  }
}

template AlgorithmResult run_algorithm<std::int64_t>(
  const AlgorithmChoice&, Sequence<std::int64_t>, Sequence<std::int64_t>, bool);
template AlgorithmResult run_algorithm<std::uint8_t>(
  const AlgorithmChoice&, Sequence<std::uint8_t>, Sequence<std::uint8_t>, bool);

} // namespace ctm
