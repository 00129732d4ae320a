// SPDX-License-Identifier: Apache-2.0

// Acceptance run. Prints one PASS/FAIL line per criterion (INFO for the
// non-gating ones) and exits non-zero if any gating criterion fails. Every
// seed, size and tolerance is pinned below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <ctm/bench.hpp>
#include <ctm/binary_matchers.hpp>
#include <ctm/dataset.hpp>
#include <ctm/filtration.hpp>
#include <ctm/kmp_matcher.hpp>
#include <ctm/oracle.hpp>
#include <ctm/packed_matcher.hpp>
#include <ctm/representations.hpp>

#include "brute_force.hpp"

namespace {

  using namespace ctm;

  // Exhaustive sweep.
  constexpr std::size_t exhaustive_max_text = 10;
  constexpr std::size_t exhaustive_max_pattern = 5;
  constexpr unsigned exhaustive_alphabet = 3;
  constexpr std::size_t memo_crosscheck_max_text = 7;

  // Randomized sweep.
  constexpr std::uint64_t random_seed = 0x5eed0001;
  constexpr int random_instances = 100000;
  constexpr std::size_t random_max_text = 2000;
  constexpr std::size_t random_max_pattern = 64;
  constexpr std::uint64_t random_alphabets[] = {2, 4, 256, std::uint64_t{1} << 32};

  // Representations.
  constexpr std::uint64_t representation_seed = 0x5eed0004;
  constexpr int representation_sequences = 100000;
  constexpr std::size_t representation_max_length = 64;

  // Global-parent verification.
  constexpr std::uint64_t verify_seed = 0x5eed0005;
  constexpr int verify_pairs = 10000;

  // Candidate density.
  constexpr std::uint64_t density_seed = 0x5eed0007;
  constexpr std::size_t density_text_length = 1000000;
  constexpr double density_sigma = 256.0;
  constexpr int density_patterns = 200;
  constexpr double density_factor = 2.0;
  constexpr std::size_t density_lengths[] = {9, 17};

  // Comparison bound: comparisons <= factor * n.
  constexpr std::uint64_t comparison_factor = 4;

  // Benchmark table.
  constexpr std::uint64_t table_seed = 0x5eed0009;
  constexpr std::size_t table_text_length = 1000000;
  constexpr std::size_t table_trials = 10;
  constexpr std::size_t table_lengths[] = {5, 9, 17, 33, 65};

  int gating_failures = 0;

  void report(const char* id, bool gating, bool passed, const std::string& what, const std::string& detail)
  {
    const char* verdict = gating ? (passed ? "PASS" : "FAIL") : "INFO";
    std::cout << verdict << " [" << id << "] " << what;
    if (!detail.empty()) {
      std::cout << " -- " << detail;
    }
    std::cout << std::endl;
    if (gating && !passed) {
      ++gating_failures;
    }
  }

  template <typename F>
  double seconds_of(F&& f)
  {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  std::string fmt(const char* format, double value)
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
  }

  unsigned clamp_q(unsigned q, std::size_t m)
  {
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(q, m > 1 ? m - 1 : 1)));
  }

  struct Tally {
    std::uint64_t instances = 0;
    std::uint64_t algorithm_runs = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t unsound = 0;
    std::uint64_t comparison_violations = 0;
    std::uint64_t worst_comparisons_milli = 0; // 1000 * comparisons / n
    std::string first_failure;
  };

  // Runs every algorithm of the library on one instance against the
  // expected match set, plus the filter soundness and comparison checks.
  template <Element T>
  void check_instance(const std::vector<T>& pattern, const std::vector<T>& text, const MatchSet& expected,
    unsigned q_bmh, unsigned q_sks, unsigned q_sbndm, bool soundness, Tally& tally)
  {
    const Sequence<T> p(pattern);
    const Sequence<T> t(text);
    const std::size_t m = p.size();
    ++tally.instances;

    auto record = [&](const std::string& name, const MatchSet& got) {
      ++tally.algorithm_runs;
      if (got != expected) {
        ++tally.mismatches;
        if (tally.first_failure.empty()) {
          tally.first_failure = name + " (n=" + std::to_string(t.size()) + ", m=" + std::to_string(m) + ")";
        }
      }
    };

    const auto model = build_pattern_model(p);
    ComparisonCounter counter;
    record("ikmpct", search(model, t, counter));
    if (counter.comparisons > comparison_factor * t.size()) {
      ++tally.comparison_violations;
    }
    if (!t.empty()) {
      tally.worst_comparisons_milli =
        std::max<std::uint64_t>(tally.worst_comparisons_milli, counter.comparisons * 1000 / t.size());
    }
    record("kmpct-baseline", baseline_pd_search(p, t));

    const KmpBitMatcher kmp;
    const HorspoolMatcher bmh(q_bmh);
    const SkipSearchMatcher sks(q_sks);
    const SbndmMatcher sbndm(q_sbndm);
    std::vector<const BinaryMatcher*> matchers = {&kmp, &bmh, &sks};
    if (m - 1 <= 64) {
      matchers.push_back(&sbndm);
    }
    for (const BinaryMatcher* matcher : matchers) {
      record("filter:" + matcher->name(), filtered_search(p, t, *matcher));
    }
    if constexpr (std::is_same_v<T, std::uint8_t>) {
      if (m <= packed_max_pattern) {
        record("packed", packed_search(p, t));
      }
    }

    if (soundness && m >= 2 && m <= t.size()) {
      const auto pbits = compute_binary(p);
      const auto tbits = compute_binary(t);
      for (const BinaryMatcher* matcher : matchers) {
        const auto candidates = filter(pbits, tbits, *matcher);
        if (!std::includes(candidates.begin(), candidates.end(), expected.begin(), expected.end())) {
          ++tally.unsound;
        }
      }
    }
  }

  // ---------------------------------------------------------------- AC1

  // Oracle tree class of every ternary sequence of length 1..5, indexed by
  // its base-3 code (first element least significant).
  std::vector<std::vector<int>> exhaustive_tree_classes()
  {
    std::vector<std::vector<int>> classes(exhaustive_max_pattern + 1);
    for (std::size_t m = 1; m <= exhaustive_max_pattern; ++m) {
      std::map<std::string, int> ids;
      ctm::testing::for_each_sequence<std::uint8_t>(m, exhaustive_alphabet, [&](const std::vector<std::uint8_t>& s) {
        const auto key = oracle::build_cartesian_tree(Sequence<std::uint8_t>(s)).to_string();
        const auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
        classes[m].push_back(it->second);
      });
    }
    return classes;
  }

  std::size_t ternary_code(const std::uint8_t* s, std::size_t m)
  {
    std::size_t code = 0;
    for (std::size_t k = m; k-- > 0;) {
      code = code * exhaustive_alphabet + s[k];
    }
    return code;
  }

  template <typename T>
  std::vector<T> widen(const std::vector<std::uint8_t>& v)
  {
    return std::vector<T>(v.begin(), v.end());
  }

  void criterion_exhaustive(Tally& tally, std::uint64_t& memo_checked, std::uint64_t& memo_mismatch)
  {
    const auto classes = exhaustive_tree_classes();
    std::vector<std::vector<std::uint8_t>> patterns;
    for (std::size_t m = 1; m <= exhaustive_max_pattern; ++m) {
      ctm::testing::for_each_sequence<std::uint8_t>(
        m, exhaustive_alphabet, [&](const std::vector<std::uint8_t>& s) { patterns.push_back(s); });
    }

    std::uint64_t text_index = 0;
    for (std::size_t n = 0; n <= exhaustive_max_text; ++n) {
      ctm::testing::for_each_sequence<std::uint8_t>(n, exhaustive_alphabet, [&](const std::vector<std::uint8_t>& text) {
        ++text_index;
        const bool wide = text_index % 2 == 0;
        const auto text_wide = widen<std::int64_t>(text);
        for (const auto& pattern : patterns) {
          const std::size_t m = pattern.size();
          const int target = classes[m][ternary_code(pattern.data(), m)];
          MatchSet expected;
          for (std::size_t i = 0; i + m <= n; ++i) {
            if (classes[m][ternary_code(text.data() + i, m)] == target) {
              expected.push_back(i + 1);
            }
          }
          if (n <= memo_crosscheck_max_text) {
            ++memo_checked;
            if (oracle::naive_match(Sequence<std::uint8_t>(text), Sequence<std::uint8_t>(pattern)) != expected) {
              ++memo_mismatch;
            }
          }
          // Cycle q through every admissible value across the sweep.
          const unsigned q = clamp_q(1 + static_cast<unsigned>(text_index % 4), m);
          if (wide) {
            check_instance(widen<std::int64_t>(pattern), text_wide, expected, q, q, q, true, tally);
          } else {
            check_instance(pattern, text, expected, q, q, q, true, tally);
          }
        }
      });
    }
  }

  template <typename T>
  std::vector<T> draw_pattern(std::mt19937_64& rng, const std::vector<T>& text, std::size_t m, std::uint64_t alphabet,
    bool from_text)
  {
    if (from_text && text.size() >= m) {
      const auto at = static_cast<std::ptrdiff_t>(rng() % (text.size() - m + 1));
      return std::vector<T>(text.begin() + at, text.begin() + at + static_cast<std::ptrdiff_t>(m));
    }
    return ctm::testing::random_sequence<T>(rng, m, alphabet);
  }

  void criterion_random(Tally& tally)
  {
    std::mt19937_64 rng(random_seed);
    std::uniform_int_distribution<std::size_t> text_length(0, random_max_text);
    std::uniform_int_distribution<std::size_t> short_length(1, packed_max_pattern);
    std::uniform_int_distribution<std::size_t> long_length(packed_max_pattern + 1, random_max_pattern);
    for (int k = 0; k < random_instances; ++k) {
      const std::uint64_t alphabet = random_alphabets[k % 4];
      const std::size_t n = text_length(rng);
      const std::size_t m = (k / 4) % 2 == 0 ? short_length(rng) : long_length(rng);
      const bool from_text = (k / 8) % 2 == 0;
      const auto draw_q = [&] {
        return clamp_q(1 + static_cast<unsigned>(rng() % 16), m);
      };
      const unsigned q_bmh = draw_q();
      const unsigned q_sks = draw_q();
      const unsigned q_sbndm = draw_q();
      // Small alphabets alternate between byte and wide elements.
      const bool bytes = alphabet <= 256 && (k / 16) % 2 == 0;
      if (bytes) {
        const auto text = ctm::testing::random_sequence<std::uint8_t>(rng, n, alphabet);
        const auto pattern = draw_pattern(rng, text, m, alphabet, from_text);
        const auto expected = oracle::naive_match(Sequence<std::uint8_t>(text), Sequence<std::uint8_t>(pattern));
        check_instance(pattern, text, expected, q_bmh, q_sks, q_sbndm, true, tally);
      } else {
        const auto text = ctm::testing::random_sequence<std::int64_t>(rng, n, alphabet);
        const auto pattern = draw_pattern(rng, text, m, alphabet, from_text);
        const auto expected = oracle::naive_match(Sequence<std::int64_t>(text), Sequence<std::int64_t>(pattern));
        check_instance(pattern, text, expected, q_bmh, q_sks, q_sbndm, true, tally);
      }
    }
  }

  // ---------------------------------------------------------------- AC2, AC3

  void criterion_worked_example()
  {
    const std::vector<std::int64_t> text = {10, 12, 16, 15, 6, 14, 9, 12, 11, 14, 9, 17, 12, 10, 12};
    const std::vector<std::int64_t> pattern = {3, 1, 6, 4, 8, 6, 7, 5, 9};
    const MatchSet expected = {4};
    const Sequence<std::int64_t> t(text);
    const Sequence<std::int64_t> p(pattern);

    std::vector<std::string> wrong;
    std::size_t checked = 0;
    auto check = [&](const std::string& name, const MatchSet& got) {
      ++checked;
      if (got != expected) {
        wrong.push_back(name);
      }
    };
    check("naive", oracle::naive_match(t, p));
    for (const auto& choice : table_roster(pattern.size(), true)) {
      check(choice.id(), run_algorithm<std::int64_t>(choice, p, t).matches);
    }
    for (unsigned q = 1; q <= pattern.size() - 1; ++q) {
      check("filter:bmh/q" + std::to_string(q), filtered_search(p, t, HorspoolMatcher(q)));
      check("filter:sks/q" + std::to_string(q), filtered_search(p, t, SkipSearchMatcher(q)));
      check("filter:sbndm/q" + std::to_string(q), filtered_search(p, t, SbndmMatcher(q)));
    }
    const std::vector<std::uint8_t> text8(text.begin(), text.end());
    const std::vector<std::uint8_t> pattern8(pattern.begin(), pattern.end());
    for (const auto backend : {LaneBackend::scalar, LaneBackend::native}) {
      check("packed", packed_search(Sequence<std::uint8_t>(pattern8), Sequence<std::uint8_t>(text8), backend));
    }

    std::string detail = std::to_string(checked) + " algorithm runs report {4}";
    for (const auto& w : wrong) {
      detail += "; wrong: " + w;
    }
    report("AC2", true, wrong.empty(), "worked example, every algorithm", detail);
  }

  void criterion_packed_example()
  {
    const std::vector<std::uint8_t> pattern = {3, 1, 6, 4, 8};
    const std::array<std::uint8_t, 16> window = {10, 12, 16, 15, 6, 14, 9, 12, 11, 14, 9, 17, 12, 13, 12, 10};
    const auto plan = build_shift_plan(Sequence<std::uint8_t>(pattern));

    bool ok = true;
    std::string offsets;
    for (const auto backend : {LaneBackend::scalar, LaneBackend::native}) {
      const auto mask = match_window(plan, window, backend);
      std::string these;
      for (unsigned j = 0; j < 16; ++j) {
        if (mask >> j & 1u) {
          these += (these.empty() ? "" : ",") + std::to_string(j);
        }
      }
      ok = ok && mask == ((1u << 3) | (1u << 5) | (1u << 9));
      offsets = these;
    }
    // The window search must see the same three occurrences.
    const std::vector<std::uint8_t> text(window.begin(), window.end());
    ok = ok && packed_search(Sequence<std::uint8_t>(pattern), Sequence<std::uint8_t>(text)) == MatchSet{4, 6, 10};
    report("AC3", true, ok, "packed window example", "offsets {" + offsets + "} with " +
      std::to_string(plan.entries.size()) + " comparison blocks");
  }

  // ---------------------------------------------------------------- AC4

  void criterion_representations()
  {
    const std::vector<std::int64_t> s = {3, 1, 6, 4, 8, 6, 7, 5, 9};
    const std::vector<std::size_t> pp = {1, 2, 2, 2, 4, 4, 6, 4, 8};
    const std::vector<std::size_t> pc = {1, 1, 3, 3, 5, 5, 7, 6, 9};
    const std::vector<std::size_t> gp = {2, 2, 4, 2, 6, 8, 6, 4, 8};
    bool frozen = ctm::testing::bf_prefix_parent(s) == pp && ctm::testing::bf_prefix_child(s) == pc &&
      ctm::testing::bf_global_parent(s) == gp;
    const auto reps = compute_representations(Sequence<std::int64_t>(s));
    frozen = frozen && reps.parent.values == pp && reps.child.values == pc && reps.global_parent.values == gp;

    std::mt19937_64 rng(representation_seed);
    std::uniform_int_distribution<std::size_t> length(0, representation_max_length);
    const std::uint64_t alphabets[] = {2, 4, 256, std::uint64_t{1} << 32};
    int mismatches = 0;
    for (int k = 0; k < representation_sequences; ++k) {
      const auto seq = ctm::testing::random_sequence<std::int64_t>(rng, length(rng), alphabets[k % 4]);
      const auto r = compute_representations(Sequence<std::int64_t>(seq));
      if (r.parent.values != ctm::testing::bf_prefix_parent(seq) ||
          r.child.values != ctm::testing::bf_prefix_child(seq) ||
          r.global_parent.values != ctm::testing::bf_global_parent(seq) ||
          compute_parent_distance(Sequence<std::int64_t>(seq)).values != ctm::testing::bf_parent_distance(seq)) {
        ++mismatches;
      }
    }
    report("AC4", true, frozen && mismatches == 0, "representations match their definitions",
      std::to_string(representation_sequences) + " random sequences, " + std::to_string(mismatches) +
        " mismatches; frozen example values " + (frozen ? "reproduced" : "NOT reproduced"));
  }

  // ---------------------------------------------------------------- AC5

  void criterion_verification()
  {
    std::mt19937_64 rng(verify_seed);
    std::uint64_t windows = 0;
    std::uint64_t rejected_by_filter = 0;
    std::uint64_t mismatches = 0;
    for (int k = 0; k < verify_pairs; ++k) {
      const std::uint64_t alphabet = random_alphabets[k % 4];
      const std::size_t n = 1 + rng() % 300;
      const std::size_t m = 1 + rng() % std::min<std::size_t>(n, 24);
      const auto text = ctm::testing::random_sequence<std::int64_t>(rng, n, alphabet);
      const auto pattern = draw_pattern(rng, text, m, alphabet, k % 2 == 0);
      const Sequence<std::int64_t> t(text);
      const Sequence<std::int64_t> p(pattern);
      const auto gp = compute_global_parent(p);
      const auto target = oracle::build_cartesian_tree(p);
      const auto candidates =
        m >= 2 ? filter(compute_binary(p), compute_binary(t), KmpBitMatcher()) : CandidateSet{};
      for (Position i = 1; i + m - 1 <= n; ++i) {
        ++windows;
        const bool truth = oracle::trees_equal(oracle::build_cartesian_tree(t.subspan(i - 1, m)), target);
        if (verify(gp, t, i) != truth) {
          ++mismatches;
        }
        if (m >= 2 && !std::binary_search(candidates.begin(), candidates.end(), i)) {
          ++rejected_by_filter;
        }
      }
    }
    report("AC5", true, mismatches == 0, "global-parent verification equals tree equality",
      std::to_string(windows) + " windows (" + std::to_string(rejected_by_filter) + " rejected by the filter), " +
        std::to_string(mismatches) + " mismatches");
  }

  // ---------------------------------------------------------------- AC7

  void criterion_density()
  {
    std::mt19937_64 rng(density_seed);
    const auto text = ctm::testing::random_sequence<std::uint8_t>(rng, density_text_length, 256);
    const auto tbits = compute_binary(Sequence<std::uint8_t>(text));
    const KmpBitMatcher matcher;

    for (const std::size_t m : density_lengths) {
      const double windows = static_cast<double>(density_text_length - m + 1);
      const double model = std::pow(0.5 + 1.0 / (2.0 * density_sigma * density_sigma), static_cast<double>(m - 1));

      // Gate: patterns with uniformly random binary representation, built
      // as a +-1 walk so every descent pattern is equally likely.
      double walk_total = 0;
      for (int k = 0; k < density_patterns; ++k) {
        std::vector<std::uint8_t> p = {128};
        for (std::size_t j = 1; j < m; ++j) {
          p.push_back(static_cast<std::uint8_t>(rng() & 1 ? p.back() - 1 : p.back() + 1));
        }
        walk_total += static_cast<double>(filter(compute_binary(Sequence<std::uint8_t>(p)), tbits, matcher).size());
      }
      const double walk_ratio = walk_total / density_patterns / windows / model;

      // Reference: i.i.d. byte patterns, whose descent patterns are not
      // uniform; reported only.
      double iid_total = 0;
      for (int k = 0; k < density_patterns; ++k) {
        const auto p = ctm::testing::random_sequence<std::uint8_t>(rng, m, 256);
        iid_total += static_cast<double>(filter(compute_binary(Sequence<std::uint8_t>(p)), tbits, matcher).size());
      }
      const double iid_ratio = iid_total / density_patterns / windows / model;

      const bool within = walk_ratio <= density_factor && walk_ratio >= 1.0 / density_factor;
      report("AC7", true, within, "candidate density, m = " + std::to_string(m),
        "observed/model = " + fmt("%.3f", walk_ratio) + " over " + std::to_string(density_patterns) +
          " patterns with uniform binary representation (model " + fmt("%.3e", model) + ", tolerance factor " +
          fmt("%.0f", density_factor) + ")");
      report("AC7", false, true, "candidate density, m = " + std::to_string(m) + ", i.i.d. byte patterns",
        "observed/model = " + fmt("%.3f", iid_ratio));
    }
  }

  // ---------------------------------------------------------------- AC9

  void criterion_table()
  {
    const auto text = generate_dataset({DatasetKind::random_byte, table_seed, table_text_length, std::nullopt});
    BenchConfig config;
    config.pattern_lengths.assign(std::begin(table_lengths), std::end(table_lengths));
    config.trials = table_trials;
    config.seed = table_seed;
    std::vector<RunReport> reports;
    bool agreed = true;
    try {
      reports = bench(text, config);
    } catch (const AgreementError& e) {
      agreed = false;
      report("AC9", false, false, "benchmark table", e.what());
      return;
    }
    std::ostringstream table;
    print_table(table, reports);
    std::cout << table.str();

    std::string trend;
    for (const std::size_t m : table_lengths) {
      if (m < 17) {
        continue;
      }
      double ikmpct = 0;
      double best = 1e300;
      std::string best_id;
      for (const auto& r : reports) {
        if (r.pattern_length != m) {
          continue;
        }
        if (r.algorithm == "ikmpct") {
          ikmpct = r.seconds;
        } else if (r.algorithm.rfind("filter:", 0) == 0 && r.seconds < best) {
          best = r.seconds;
          best_id = r.algorithm;
        }
      }
      trend += (trend.empty() ? "" : "; ") + std::string("m=") + std::to_string(m) + " " + best_id + " " +
        fmt("%.2fx", ikmpct / best) + " faster than ikmpct";
    }
    report("AC9", false, agreed, "benchmark table, random bytes n = 10^6", trend);
  }

} // namespace

int main()
{
  std::cout << std::unitbuf;
  const auto t0 = std::chrono::steady_clock::now();

  Tally exhaustive;
  std::uint64_t memo_checked = 0;
  std::uint64_t memo_mismatch = 0;
  const double exhaustive_seconds = seconds_of([&] { criterion_exhaustive(exhaustive, memo_checked, memo_mismatch); });
  Tally random;
  const double random_seconds = seconds_of([&] { criterion_random(random); });

  report("AC1", true, exhaustive.mismatches == 0 && memo_mismatch == 0, "oracle equivalence, exhaustive",
    std::to_string(exhaustive.instances) + " (T, P) pairs with n <= 10, m <= 5 over {0,1,2}, " +
      std::to_string(exhaustive.algorithm_runs) + " algorithm runs, " + std::to_string(exhaustive.mismatches) +
      " mismatches; memoized oracle checked against naive matching on " + std::to_string(memo_checked) +
      " pairs, " + std::to_string(memo_mismatch) + " mismatches; " + fmt("%.1f s", exhaustive_seconds) +
      (exhaustive.first_failure.empty() ? "" : "; first: " + exhaustive.first_failure));
  report("AC1", true, random.mismatches == 0, "oracle equivalence, randomized",
    std::to_string(random.instances) + " instances (n <= 2000, m <= 64), " + std::to_string(random.algorithm_runs) +
      " algorithm runs, " + std::to_string(random.mismatches) + " mismatches; " + fmt("%.1f s", random_seconds) +
      (random.first_failure.empty() ? "" : "; first: " + random.first_failure));

  criterion_worked_example();
  criterion_packed_example();
  criterion_representations();
  criterion_verification();

  report("AC6", true, exhaustive.unsound + random.unsound == 0, "filter candidates contain every occurrence",
    std::to_string(exhaustive.unsound + random.unsound) + " violations over all exhaustive and randomized instances");

  criterion_density();

  report("AC8", true, exhaustive.comparison_violations + random.comparison_violations == 0,
    "ikmpct comparisons <= 4n",
    std::to_string(exhaustive.comparison_violations + random.comparison_violations) +
      " violations; worst ratio " +
      fmt("%.3f", static_cast<double>(std::max(exhaustive.worst_comparisons_milli, random.worst_comparisons_milli)) /
          1000.0) + " comparisons per element");

  criterion_table();

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (gating_failures == 0 ? "ALL GATING CRITERIA PASSED" : "GATING FAILURES: " + std::to_string(gating_failures))
            << " (" << fmt("%.1f", total) << " s)" << std::endl;
  return gating_failures == 0 ? 0 : 1;
}
