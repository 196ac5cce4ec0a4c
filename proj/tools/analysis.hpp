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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cispectra/ptable.hpp"
#include "cispectra/reference.hpp"

namespace cispectra::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDisagreement = 1,
  kParseError = 2,
  kResourceLimit = 3,
  kTargetUnmet = 4,
};

struct AnalysisResult {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  bool balanced = false;
  bool symmetric = false;
  bool symmetric_shortcut = false;
  std::uint32_t ci_order = 0;
  int resiliency_order = -1;
  /// First failing (tuple, conjugate) at order ci_order + 1, when ci_order < n.
  std::optional<std::string> ci_witness;
  std::vector<MethodReport> reports;
};

struct AnalyzeOptions {
  bool use_shortcut = true;
  bool with_reports = false;
};

AnalysisResult analyze(const PFunction& f, const AnalyzeOptions& options);

nlohmann::json to_json(const AnalysisResult& result);
AnalysisResult analysis_from_json(const nlohmann::json& j);
void print_text(std::ostream& out, const AnalysisResult& result);

struct SearchOptions {
  std::uint32_t p = 2;
  std::uint32_t n = 3;
  std::uint32_t target_ci = 1;
  bool resilient = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
};

struct SearchOutcome {
  PFunction best;
  bool found = false;
  std::uint64_t evaluations = 0;
  /// Set when the target is unreachable for every function.
  std::optional<std::string> infeasible;
};

/// Random-restart hill climb. Cost is (imbalance if resilient, number of
/// ordered tuples with a nonvanishing critical value at the target order),
/// compared lexicographically; zero cost means the target is met.
SearchOutcome search(const SearchOptions& options);

}  // namespace cispectra::cli
