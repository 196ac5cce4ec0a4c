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

#include "analysis.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "cispectra/serialize.hpp"
#include "cispectra/spectral.hpp"

namespace cispectra::cli {

AnalysisResult analyze(const PFunction& f, const AnalyzeOptions& options) {
  AnalysisResult result;
  result.p = f.p();
  result.n = f.n();
  result.balanced = is_balanced(f);
  result.symmetric = is_symmetric(f);
  result.symmetric_shortcut = result.symmetric && options.use_shortcut;
  result.ci_order = result.symmetric_shortcut ? ci_order_symmetric(f) : ci_order(f);
  result.resiliency_order = resiliency_order(f);
  if (result.ci_order < f.n()) {
    const auto check = result.symmetric_shortcut ? check_ci_symmetric(f, result.ci_order + 1)
                                                 : check_ci(f, result.ci_order + 1);
    if (check.witness)
      result.ci_witness = "order " + std::to_string(result.ci_order + 1) + " tuple " +
                          check.witness->tuple.to_string() + " conjugate " +
                          std::to_string(check.witness->conjugate);
  }
  if (options.with_reports)
    for (std::uint32_t m = 1; m <= f.n(); ++m) result.reports.push_back(consensus(f, m));
  return result;
}

nlohmann::json to_json(const AnalysisResult& result) {
  nlohmann::json j;
  j["p"] = result.p;
  j["n"] = result.n;
  j["balanced"] = result.balanced;
  j["symmetric"] = result.symmetric;
  j["symmetric_shortcut"] = result.symmetric_shortcut;
  j["ci_order"] = result.ci_order;
  j["resiliency_order"] = result.resiliency_order;
  if (result.ci_witness) j["ci_witness"] = *result.ci_witness;
  if (!result.reports.empty()) {
    j["reports"] = nlohmann::json::array();
    for (const auto& report : result.reports)
      j["reports"].push_back(nlohmann::json::parse(cispectra::to_json(report)));
  }
  return j;
}

AnalysisResult analysis_from_json(const nlohmann::json& j) {
  AnalysisResult result;
  result.p = j.at("p").get<std::uint32_t>();
  result.n = j.at("n").get<std::uint32_t>();
  result.balanced = j.at("balanced").get<bool>();
  result.symmetric = j.at("symmetric").get<bool>();
  result.symmetric_shortcut = j.at("symmetric_shortcut").get<bool>();
  result.ci_order = j.at("ci_order").get<std::uint32_t>();
  result.resiliency_order = j.at("resiliency_order").get<int>();
  if (j.contains("ci_witness")) result.ci_witness = j.at("ci_witness").get<std::string>();
  if (j.contains("reports"))
    for (const auto& r : j.at("reports")) result.reports.push_back(method_report_from_json(r.dump()));
  return result;
}

void print_text(std::ostream& out, const AnalysisResult& result) {
  out << "p = " << result.p << ", n = " << result.n << '\n'
      << "balanced:          " << (result.balanced ? "yes" : "no") << '\n'
      << "symmetric:         " << (result.symmetric ? "yes" : "no")
      << (result.symmetric_shortcut ? " (single-location test used)" : "") << '\n'
      << "ci order:          " << result.ci_order << '\n'
      << "resiliency order:  " << result.resiliency_order
      << (result.resiliency_order < 0 ? " (unbalanced)" : "") << '\n';
  if (result.ci_witness) out << "first failure:     " << *result.ci_witness << '\n';
  for (const auto& report : result.reports) {
    out << "order " << report.m << ":";
    for (auto method : kAllMethods)
      out << ' ' << method_name(method) << '=' << (report.verdict(method) ? "yes" : "no");
    out << (report.consensus ? "  [consensus]" : "  [DISAGREEMENT]") << '\n';
  }
}

namespace {

struct Cost {
  std::uint64_t imbalance = 0;
  std::uint64_t nonvanishing = 0;

  auto operator<=>(const Cost&) const = default;
  bool zero() const { return imbalance == 0 && nonvanishing == 0; }
};

Cost cost_of(const PFunction& f, const SearchOptions& options) {
  Cost cost;
  if (options.resilient) {
    const auto expected = f.size() / f.p();
    for (auto c : f.value_counts()) cost.imbalance += c > expected ? c - expected : expected - c;
  }
  if (options.target_ci > 0) cost.nonvanishing = count_nonvanishing_tuples(f, options.target_ci);
  return cost;
}

}  // namespace

SearchOutcome search(const SearchOptions& options) {
  SearchOutcome outcome{random_function(options.p, options.n, options.seed), false, 0, std::nullopt};
  if (options.target_ci > options.n) {
    outcome.infeasible = "target order exceeds the number of variables";
    return outcome;
  }
  if (options.resilient && options.target_ci >= options.n) {
    outcome.infeasible = "an m-resilient function needs m <= n - 1";
    return outcome;
  }

  std::mt19937_64 rng(options.seed);
  const auto size = outcome.best.size();
  const auto p = options.p;
  std::uniform_int_distribution<std::size_t> pick_point(0, size - 1);
  std::uniform_int_distribution<std::uint32_t> pick_shift(1, p - 1);
  const std::uint64_t patience = std::max<std::uint64_t>(64, 4 * size);

  std::vector<std::uint32_t> current(outcome.best.table().begin(), outcome.best.table().end());
  Cost current_cost = cost_of(outcome.best, options);
  Cost best_cost = current_cost;
  ++outcome.evaluations;
  std::uint64_t stale = 0;

  while (!best_cost.zero() && outcome.evaluations < options.budget) {
    if (stale >= patience) {
      for (auto& v : current) v = static_cast<std::uint32_t>(rng() % p);
      current_cost = cost_of(PFunction(p, options.n, current), options);
      ++outcome.evaluations;
      stale = 0;
      continue;
    }
    auto candidate = current;
    const auto k = pick_point(rng);
    if (options.resilient && (rng() & 1) != 0) {
      std::swap(candidate[k], candidate[pick_point(rng)]);
    } else {
      candidate[k] = (candidate[k] + pick_shift(rng)) % p;
    }
    const PFunction f(p, options.n, candidate);
    const auto cost = cost_of(f, options);
    ++outcome.evaluations;
    if (cost <= current_cost) {
      stale = cost < current_cost ? 0 : stale + 1;
      current = std::move(candidate);
      current_cost = cost;
      if (cost < best_cost) {
        best_cost = cost;
        outcome.best = f;
      }
    } else {
      ++stale;
    }
  }
  outcome.found = best_cost.zero();
  return outcome;
}

}  // namespace cispectra::cli
