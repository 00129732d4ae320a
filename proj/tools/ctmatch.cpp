// SPDX-License-Identifier: Apache-2.0

// ctmatch: Cartesian tree matching from the command line.
//
//   ctmatch --mode match --dataset file:text.txt --pattern pattern.txt
//   ctmatch --mode bench --dataset random-int --text-len 1000000 --pattern-len 5,9,17 --algo all
//
// Exit status: 0 success, 1 algorithms disagree, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <ctm/bench.hpp>
#include <ctm/dataset.hpp>

namespace {

  constexpr int exit_disagreement = 1;
  constexpr int exit_usage = 2;

  struct Options {
    std::string mode = "match";
    std::vector<std::string> algorithms;
    std::optional<unsigned> q;
    std::vector<std::size_t> pattern_lengths;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string dataset = "random-int";
    std::string format = "int-lines";
    std::string pattern_path;
    std::size_t text_length = 1'000'000;
    std::optional<std::uint64_t> int_range;
    bool verify_oracle = false;
    bool csv = false;
    bool instrument = false;
    bool no_timing = false;
  };

  ctm::FileFormat parse_format(const std::string& name)
  {
    if (name == "int-lines") {
      return ctm::FileFormat::int_lines;
    }
    if (name == "bytes") {
      return ctm::FileFormat::bytes;
    }
    throw ctm::UsageError("unknown format '" + name + "' (expected int-lines or bytes)");
  }

  ctm::TextData load_text(const Options& opt)
  {
    constexpr std::string_view file_prefix = "file:";
    if (opt.dataset.rfind(file_prefix, 0) == 0) {
      return ctm::read_text_file(opt.dataset.substr(file_prefix.size()), parse_format(opt.format));
    }
    const auto kind = ctm::parse_dataset_kind(opt.dataset);
    if (!kind) {
      throw ctm::UsageError("unknown dataset '" + opt.dataset + "'");
    }
    if (opt.int_range && *kind != ctm::DatasetKind::random_int) {
      throw ctm::UsageError("--int-range applies only to random-int");
    }
    return ctm::generate_dataset({*kind, opt.seed, opt.text_length, opt.int_range});
  }

  std::vector<ctm::AlgorithmChoice> parse_algorithms(const std::vector<std::string>& ids, std::optional<unsigned> q)
  {
    std::vector<ctm::AlgorithmChoice> out;
    for (const auto& id : ids) {
      if (id == "all") {
        return {};
      }
      out.push_back(ctm::parse_algorithm(id, q));
    }
    return out;
  }

  int run_match(const Options& opt)
  {
    if (opt.pattern_path.empty()) {
      throw ctm::UsageError("--mode match requires --pattern");
    }
    const auto text = load_text(opt);
    const auto pattern = ctm::read_text_file(opt.pattern_path, parse_format(opt.format));
    if (pattern.index() != text.index()) {
      throw ctm::UsageError("pattern and text must use the same format");
    }
    const std::size_t m = ctm::text_size(pattern);
    if (m == 0) {
      throw ctm::UsageError("pattern must be non-empty");
    }

    auto algorithms = parse_algorithms(opt.algorithms.empty() ? std::vector<std::string>{"ikmpct"} : opt.algorithms, opt.q);
    if (algorithms.empty()) {
      algorithms = ctm::table_roster(m, std::holds_alternative<std::vector<std::uint8_t>>(text));
    }

    std::optional<ctm::MatchSet> first;
    std::string first_id;
    for (const auto& choice : algorithms) {
      const auto matches = std::visit(
        [&](const auto& t) {
          using Vec = std::decay_t<decltype(t)>;
          using T = typename Vec::value_type;
          const auto& p = std::get<Vec>(pattern);
          return ctm::run_algorithm<T>(choice, ctm::Sequence<T>(p), ctm::Sequence<T>(t)).matches;
        },
        text);
      if (!first) {
        first = matches;
        first_id = choice.id();
      } else if (matches != *first) {
        std::cerr << "ctmatch: " << choice.id() << " found " << matches.size() << " matches, " << first_id
                  << " found " << first->size() << "\n";
        return exit_disagreement;
      }
    }
    for (const auto p : *first) {
      std::cout << "match at " << p << "\n";
    }
    std::cout << "count " << first->size() << "\n";
    return 0;
  }

  int run_bench(const Options& opt)
  {
    if (opt.pattern_lengths.empty()) {
      throw ctm::UsageError("--mode bench requires --pattern-len");
    }
    const auto text = load_text(opt);
    ctm::BenchConfig config;
    config.pattern_lengths = opt.pattern_lengths;
    config.algorithms = parse_algorithms(opt.algorithms.empty() ? std::vector<std::string>{"all"} : opt.algorithms, opt.q);
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.instrument = opt.instrument;
    config.verify_oracle = opt.verify_oracle;
    const auto reports = ctm::bench(text, config);
    if (opt.csv) {
      ctm::print_csv(std::cout, reports, !opt.no_timing);
    } else {
      ctm::print_table(std::cout, reports);
    }
    return 0;
  }

} // namespace

int main(int argc, char** argv)
{
  Options opt;
  CLI::App app{"Cartesian tree matching"};
  app.add_option("--mode", opt.mode, "match or bench")->check(CLI::IsMember({"match", "bench"}));
  app.add_option("--algo", opt.algorithms,
    "kmpct-baseline, ikmpct, filter:kmp, filter:sbndm, filter:bmh, filter:sks, packed or all; repeatable");
  app.add_option("--q", opt.q, "q-gram size for filter:sbndm, filter:bmh and filter:sks (1..16)");
  app.add_option("--pattern-len", opt.pattern_lengths, "pattern lengths for bench mode")->delimiter(',');
  app.add_option("--trials", opt.trials, "patterns per length")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for generated text and sampled patterns");
  app.add_option("--dataset", opt.dataset, "random-int, random-byte, temp-like or file:PATH");
  app.add_option("--format", opt.format, "file format: int-lines or bytes");
  app.add_option("--pattern", opt.pattern_path, "pattern file for match mode");
  app.add_option("--text-len", opt.text_length, "length of generated text")->check(CLI::PositiveNumber);
  app.add_option("--int-range", opt.int_range, "random-int values in [0, R)")->check(CLI::PositiveNumber);
  app.add_flag("--verify-oracle", opt.verify_oracle, "cross-check bench results with the naive matcher");
  app.add_flag("--csv", opt.csv, "CSV instead of the aligned table");
  app.add_flag("--instrument", opt.instrument, "count element comparisons of ikmpct");
  app.add_flag("--no-timing", opt.no_timing, "leave the CSV seconds column empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    return opt.mode == "match" ? run_match(opt) : run_bench(opt);
  } catch (const ctm::AgreementError& e) {
    std::cerr << "ctmatch: " << e.what() << "\n";
    return exit_disagreement;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ctmatch: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "ctmatch: " << e.what() << "\n";
    return exit_usage;
  }
}
