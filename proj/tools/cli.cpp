/*
 * Copyright 2026 The cispectra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "analysis.hpp"
#include "cispectra/error.hpp"
#include "cispectra/polynomial.hpp"
#include "cispectra/serialize.hpp"
#include "cispectra/spectral.hpp"

namespace cispectra::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
// Exhaustive cross-checks enumerate p^(p^n) tables.
constexpr std::uint64_t kMaxExhaustiveFunctions = std::uint64_t{1} << 24;

struct InputSpec {
  std::string file;
  std::string poly;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::optional<std::uint64_t> random_seed;
};

void add_input_options(CLI::App& cmd, InputSpec& input) {
  cmd.add_option("file", input.file, "Truth-table file (\"-\" for stdin)");
  cmd.add_option("--poly", input.poly, "Polynomial over F_p, e.g. \"x1*x2 + 2*x3^2\"");
  cmd.add_option("--p", input.p, "Prime modulus (with --poly or --random-seed)");
  cmd.add_option("--n", input.n, "Number of variables (with --poly or --random-seed)");
  cmd.add_option("--random-seed", input.random_seed, "Use random_function(p, n, seed)");
}

void check_size(std::uint32_t p, std::uint32_t n) {
  const auto size = table_size(p, n);
  if (size > desk_size_limit())
    throw SizeLimitError("p^n = " + std::to_string(size) + " exceeds the size limit " +
                         std::to_string(desk_size_limit()) + " (raise with CI_SPECTRA_MAX_N)");
}

PFunction load_input(const InputSpec& input) {
  const int sources = !input.file.empty() + !input.poly.empty() + input.random_seed.has_value();
  if (sources != 1)
    throw DomainError("give exactly one of: a truth-table file, --poly, --random-seed");
  if (!input.file.empty()) {
    PFunction f = [&] {
      if (input.file == "-") return read_truth_table(std::cin);
      std::ifstream in(input.file);
      if (!in) throw DomainError("cannot open " + input.file);
      return read_truth_table(in);
    }();
    check_size(f.p(), f.n());
    return f;
  }
  if (!is_prime(input.p)) throw DomainError("--p must be a prime");
  if (input.n < 1) throw DomainError("--n must be at least 1");
  check_size(input.p, input.n);
  if (!input.poly.empty()) return parse_polynomial(input.poly, input.p, input.n);
  return random_function(input.p, input.n, *input.random_seed);
}

std::vector<std::uint32_t> parse_index_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad tuple entry \"" + item + "\"", 0);
    }
    if (used != item.size()) throw ParseError("bad tuple entry \"" + item + "\"", 0);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// analyze

struct AnalyzeArgs {
  InputSpec input;
  bool json = false;
  bool no_shortcut = false;
  bool reports = false;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  const auto f = load_input(args.input);
  const auto result = analyze(f, AnalyzeOptions{!args.no_shortcut, args.reports});
  if (args.json)
    out << to_json(result).dump(2) << '\n';
  else
    print_text(out, result);
  return kSuccess;
}

// spectrum

struct SpectrumArgs {
  InputSpec input;
  bool json = false;
  bool full = false;
  std::optional<std::uint32_t> exact_at;
  std::string tuple;
  bool all_tuples = false;
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const auto f = load_input(args.input);
  if (args.full == args.exact_at.has_value()) throw DomainError("give exactly one of --full, --exact-at");
  if (args.full) {
    out << to_json(spectrum_dump(f), args.json ? 2 : -1) << '\n';
    return kSuccess;
  }
  const auto m = *args.exact_at;
  if (m < 1 || m > f.n()) throw DomainError("--exact-at must lie in [1, n]");
  std::vector<VariableTuple> tuples;
  if (args.all_tuples) {
    for_each_ordered_tuple(f.n(), m, [&](std::span<const std::uint32_t> t) {
      tuples.emplace_back(std::vector<std::uint32_t>(t.begin(), t.end()), f.n());
      return true;
    });
  } else if (!args.tuple.empty()) {
    tuples.emplace_back(parse_index_list(args.tuple), f.n());
  } else {
    tuples.push_back(VariableTuple::identity(m, f.n()));
  }

  nlohmann::json values = nlohmann::json::array();
  for (const auto& tuple : tuples) {
    for (std::uint32_t c = 1; c < f.p(); ++c) {
      const auto value = exact_spectrum_at_critical(f, m, tuple, c);
      const auto z = value.to_complex();
      if (args.json) {
        values.push_back({{"tuple", std::vector<std::uint32_t>(tuple.indices().begin(), tuple.indices().end())},
                          {"conjugate", c},
                          {"location", c * (f.size() / table_size(f.p(), m))},
                          {"element", value.to_string()},
                          {"zero", value.is_zero()},
                          {"complex", {z.real(), z.imag()}}});
      } else {
        out << "tuple " << tuple.to_string() << " conjugate " << c << ": " << value.to_string()
            << (value.is_zero() ? "  [zero]" : "  [nonzero]") << '\n';
      }
    }
  }
  if (args.json) {
    nlohmann::json j{{"p", f.p()}, {"n", f.n()}, {"m", m}, {"values", values}};
    out << j.dump(2) << '\n';
  }
  return kSuccess;
}

// crosscheck

struct CrosscheckArgs {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  bool exhaustive = false;
  std::optional<std::uint64_t> random;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint32_t> m;
  bool json = false;
};

int cmd_crosscheck(const CrosscheckArgs& args, std::ostream& out) {
  if (!is_prime(args.p)) throw DomainError("--p must be a prime");
  if (args.n < 1) throw DomainError("--n must be at least 1");
  if (args.exhaustive == args.random.has_value()) throw DomainError("give exactly one of --exhaustive, --random K");
  check_size(args.p, args.n);
  const auto size = table_size(args.p, args.n);

  std::uint64_t count = 0;
  if (args.exhaustive) {
    count = 1;
    for (std::uint64_t k = 0; k < size; ++k) {
      count *= args.p;
      if (count > kMaxExhaustiveFunctions)
        throw SizeLimitError("exhaustive enumeration of p^(p^n) functions exceeds " +
                             std::to_string(kMaxExhaustiveFunctions));
    }
  } else {
    count = *args.random;
  }

  std::vector<std::uint32_t> orders;
  if (args.m) {
    if (*args.m < 1 || *args.m > args.n) throw DomainError("--m must lie in [1, n]");
    orders.push_back(*args.m);
  } else {
    for (std::uint32_t m = 1; m <= args.n; ++m) orders.push_back(m);
  }

  // ci_counts[order index][method]
  std::vector<std::array<std::uint64_t, kAllMethods.size()>> ci_counts(orders.size());
  std::uint64_t disagreements = 0;
  nlohmann::json examples = nlohmann::json::array();
  std::vector<std::uint32_t> table(size, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (args.exhaustive) {
      auto rest = i;
      for (auto& v : table) {
        v = static_cast<std::uint32_t>(rest % args.p);
        rest /= args.p;
      }
    }
    const PFunction f = args.exhaustive ? PFunction(args.p, args.n, table)
                                        : random_function(args.p, args.n, args.seed + i);
    for (std::size_t o = 0; o < orders.size(); ++o) {
      const auto report = consensus(f, orders[o]);
      for (auto method : kAllMethods)
        ci_counts[o][static_cast<std::size_t>(method)] += report.verdict(method);
      if (!report.consensus) {
        ++disagreements;
        if (examples.size() < 10)
          examples.push_back({{"table", format_truth_table(f)},
                              {"report", nlohmann::json::parse(to_json(report))}});
      }
    }
  }

  if (args.json) {
    nlohmann::json j{{"p", args.p}, {"n", args.n}, {"functions", count},
                     {"mode", args.exhaustive ? "exhaustive" : "random"},
                     {"seed", args.seed}, {"disagreements", disagreements}};
    nlohmann::json per_order = nlohmann::json::array();
    for (std::size_t o = 0; o < orders.size(); ++o) {
      nlohmann::json counts{{"m", orders[o]}};
      for (auto method : kAllMethods)
        counts[std::string(method_name(method))] = ci_counts[o][static_cast<std::size_t>(method)];
      per_order.push_back(counts);
    }
    j["ci_counts"] = per_order;
    if (!examples.empty()) j["examples"] = examples;
    out << j.dump(2) << '\n';
  } else {
    out << "cross-check p = " << args.p << ", n = " << args.n << ": " << count << " functions ("
        << (args.exhaustive ? "exhaustive" : "random, seed " + std::to_string(args.seed)) << ")\n";
    for (std::size_t o = 0; o < orders.size(); ++o) {
      out << "  order " << orders[o] << " CI counts:";
      for (auto method : kAllMethods)
        out << ' ' << method_name(method) << '=' << ci_counts[o][static_cast<std::size_t>(method)];
      out << '\n';
    }
    out << "  disagreements: " << disagreements << '\n';
    for (const auto& e : examples) out << "  disagreeing table: " << e["table"].get<std::string>();
  }
  return disagreements == 0 ? kSuccess : kDisagreement;
}

// search

struct SearchArgs {
  SearchOptions options;
  std::string output;
  bool json = false;
  bool seed_given = false;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const auto& o = args.options;
  if (!is_prime(o.p)) throw DomainError("--p must be a prime");
  if (o.n < 1) throw DomainError("--n must be at least 1");
  if (o.budget < 1) throw DomainError("--budget must be at least 1");
  check_size(o.p, o.n);
  if (!args.seed_given) err << "search: using default seed " << o.seed << '\n';

  const auto outcome = search(o);
  if (outcome.infeasible) {
    err << "search: infeasible target: " << *outcome.infeasible << '\n';
    if (args.json)
      out << nlohmann::json{{"found", false}, {"infeasible", *outcome.infeasible}}.dump(2) << '\n';
    return kTargetUnmet;
  }
  const auto result = analyze(outcome.best, AnalyzeOptions{});
  if (!args.output.empty()) {
    std::ofstream file(args.output);
    if (!file) throw DomainError("cannot write " + args.output);
    write_truth_table(file, outcome.best);
  }
  if (args.json) {
    nlohmann::json j{{"found", outcome.found},
                     {"evaluations", outcome.evaluations},
                     {"seed", o.seed},
                     {"table", format_truth_table(outcome.best)},
                     {"analysis", to_json(result)}};
    out << j.dump(2) << '\n';
  } else {
    out << (outcome.found ? "target met" : "target NOT met") << " after " << outcome.evaluations
        << " evaluations\n";
    if (args.output.empty()) write_truth_table(out, outcome.best);
    print_text(out, result);
  }
  return outcome.found ? kSuccess : kTargetUnmet;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cispectra: correlation immunity and resiliency of functions F_p^n -> F_p"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "CI order, resiliency order, balance and symmetry");
  add_input_options(*analyze_cmd, analyze_args.input);
  analyze_cmd->add_flag("--json", analyze_args.json, "JSON output");
  analyze_cmd->add_flag("--no-shortcut", analyze_args.no_shortcut,
                        "Use the full tuple test even for symmetric functions");
  analyze_cmd->add_flag("--reports", analyze_args.reports, "Add six-method reports for every order");

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Float spectrum dump or exact critical values");
  add_input_options(*spectrum_cmd, spectrum_args.input);
  spectrum_cmd->add_flag("--json", spectrum_args.json, "JSON output (pretty-printed for --full)");
  spectrum_cmd->add_flag("--full", spectrum_args.full, "Emit DFT and autocorrelation as JSON");
  spectrum_cmd->add_option("--exact-at", spectrum_args.exact_at, "Exact values at location p^(n-m)");
  spectrum_cmd->add_option("--tuple", spectrum_args.tuple, "Comma-separated variable tuple, e.g. 2,1");
  spectrum_cmd->add_flag("--all-tuples", spectrum_args.all_tuples, "Every ordered m-tuple");

  CrosscheckArgs cross_args;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare all six CI characterizations");
  cross_cmd->add_option("--p", cross_args.p, "Prime modulus")->required();
  cross_cmd->add_option("--n", cross_args.n, "Number of variables")->required();
  cross_cmd->add_flag("--exhaustive", cross_args.exhaustive, "Every function F_p^n -> F_p");
  cross_cmd->add_option("--random", cross_args.random, "Number of random functions");
  cross_cmd->add_option("--seed", cross_args.seed, "Seed for --random (function i uses seed + i)");
  cross_cmd->add_option("--m", cross_args.m, "Order to test (default: all of 1..n)");
  cross_cmd->add_flag("--json", cross_args.json, "JSON output");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Hill-climb for a CI or resilient function");
  search_cmd->add_option("--p", search_args.options.p, "Prime modulus")->required();
  search_cmd->add_option("--n", search_args.options.n, "Number of variables")->required();
  search_cmd->add_option("--target-ci", search_args.options.target_ci, "Target order")->required();
  search_cmd->add_flag("--resilient", search_args.options.resilient, "Also require balance");
  auto* seed_opt = search_cmd->add_option("--seed", search_args.options.seed, "Seed");
  search_cmd->add_option("--budget", search_args.options.budget, "Maximum cost evaluations");
  search_cmd->add_option("--output", search_args.output, "Write the best truth table here");
  search_cmd->add_flag("--json", search_args.json, "JSON output");

  std::vector<const char*> argv{"cispectra"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_args, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_args, out);
    if (cross_cmd->parsed()) return cmd_crosscheck(cross_args, out);
    search_args.seed_given = seed_opt->count() > 0;
    return cmd_search(search_args, out, err);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace cispectra::cli
