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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "analysis.hpp"
#include "cispectra/polynomial.hpp"
#include "cispectra/serialize.hpp"
#include "cispectra/spectral.hpp"
#include "test_support.hpp"

namespace cispectra::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(Cli, AnalyzeSymmetricCubic) {
  const auto r = invoke({"analyze", "--poly", testing::kSymmetricCubicPolynomial, "--p", "3", "--n", "4", "--json"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ci_order"], 0);
  EXPECT_EQ(j["resiliency_order"], -1);
  EXPECT_EQ(j["symmetric"], true);
  EXPECT_EQ(j["symmetric_shortcut"], true);
  EXPECT_EQ(j["balanced"], false);
}

TEST(Cli, AnalyzeText) {
  const auto r = invoke({"analyze", "--poly", "x1 + x2", "--p", "3", "--n", "3"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("ci order:          1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("first failure:     order 2 tuple (1,2) conjugate 1"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeFileMatchesLibrary) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = trial % 2 ? random_function(3, 3, rng()) : testing::random_composed_linear(3, 3, rng);
    const auto path = temp_file("cispectra_cli_test.tt", format_truth_table(f));
    const auto r = invoke({"analyze", path.string(), "--json", "--reports"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto result = analysis_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(result.ci_order, ci_order(f));
    EXPECT_EQ(result.resiliency_order, resiliency_order(f));
    ASSERT_EQ(result.reports.size(), 3u);
    for (const auto& report : result.reports) EXPECT_EQ(report.verdict(Method::spectral), is_ci(f, report.m));
    std::filesystem::remove(path);
  }
}

TEST(Cli, AnalyzeRandomSeedIsReproducible) {
  const auto a = invoke({"analyze", "--random-seed", "7", "--p", "5", "--n", "2", "--json"});
  const auto b = invoke({"analyze", "--random-seed", "7", "--p", "5", "--n", "2", "--json"});
  ASSERT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  const auto result = analysis_from_json(nlohmann::json::parse(a.out));
  EXPECT_EQ(result.ci_order, ci_order(random_function(5, 2, 7)));
}

TEST(Cli, AnalyzeShortcutMatchesFullTest) {
  const auto with = invoke({"analyze", "--poly", "x1*x2*x3 + x1 + x2 + x3", "--p", "3", "--n", "3", "--json"});
  const auto without =
      invoke({"analyze", "--poly", "x1*x2*x3 + x1 + x2 + x3", "--p", "3", "--n", "3", "--json", "--no-shortcut"});
  const auto jw = nlohmann::json::parse(with.out), jo = nlohmann::json::parse(without.out);
  EXPECT_EQ(jw["symmetric_shortcut"], true);
  EXPECT_EQ(jo["symmetric_shortcut"], false);
  EXPECT_EQ(jw["ci_order"], jo["ci_order"]);
}

TEST(Cli, SpectrumFullOfZeroFunction) {
  const auto r = invoke({"spectrum", "--poly", "0", "--p", "3", "--n", "2", "--full"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto dump = spectrum_dump_from_json(r.out);
  ASSERT_EQ(dump.dft.size(), 9u);
  EXPECT_NEAR(dump.dft[0].real(), 9.0, 1e-12);
  for (std::size_t j = 1; j < 9; ++j) EXPECT_NEAR(std::abs(dump.dft[j]), 0.0, 1e-9);
}

TEST(Cli, SpectrumExactAt) {
  const auto r = invoke({"spectrum", "--poly", "2*x1", "--p", "3", "--n", "2", "--exact-at", "1", "--tuple", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("tuple (1) conjugate 1: 3 1 : 0 0  [zero]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("conjugate 2:"), std::string::npos);
  EXPECT_NE(r.out.find("[nonzero]"), std::string::npos);
}

TEST(Cli, SpectrumAllTuples) {
  const auto r = invoke({"spectrum", "--poly", "x1", "--p", "2", "--n", "3", "--exact-at", "2", "--all-tuples"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 6u);
}

TEST(Cli, CrosscheckExhaustive) {
  const auto r = invoke({"crosscheck", "--p", "2", "--n", "3", "--exhaustive", "--json"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["disagreements"], 0);
}

TEST(Cli, CrosscheckRandom) {
  const auto r = invoke({"crosscheck", "--p", "3", "--n", "3", "--random", "20", "--seed", "5", "--m", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("disagreements: 0"), std::string::npos) << r.out;
}

TEST(Cli, SearchFindsResilientFunction) {
  const auto path = std::filesystem::temp_directory_path() / "cispectra_search.tt";
  const auto r = invoke({"search", "--p", "2", "--n", "3", "--target-ci", "1", "--resilient", "--seed", "3",
                         "--output", path.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  std::ifstream in(path);
  const auto f = read_truth_table(in);
  EXPECT_TRUE(is_resilient(f, 1));
  std::filesystem::remove(path);
}

TEST(Cli, SearchReportsDefaultSeed) {
  const auto r = invoke({"search", "--p", "2", "--n", "2", "--target-ci", "1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.err.find("default seed 1"), std::string::npos);
}

TEST(Cli, ExitCodeTargetUnmet) {
  // A function of two ternary variables cannot be 2-resilient.
  const auto r = invoke({"search", "--p", "3", "--n", "2", "--target-ci", "2", "--resilient", "--seed", "1"});
  EXPECT_EQ(r.code, kTargetUnmet);
}

TEST(Cli, ExitCodeParseError) {
  EXPECT_EQ(invoke({"analyze", "--poly", "x1 +* x2", "--p", "3", "--n", "2"}).code, kParseError);
  EXPECT_EQ(invoke({"analyze", "--poly", "x3", "--p", "3", "--n", "2"}).code, kParseError);
  EXPECT_EQ(invoke({"analyze", "--poly", "x1", "--p", "4", "--n", "2"}).code, kParseError);
  EXPECT_EQ(invoke({"bogus"}).code, kParseError);
  EXPECT_EQ(invoke({"spectrum", "--poly", "x1", "--p", "3", "--n", "2", "--exact-at", "1", "--tuple", "1,x"}).code,
            kParseError);
  const auto path = temp_file("cispectra_bad.tt", "3 2\n0 1 2\n");
  EXPECT_EQ(invoke({"analyze", path.string()}).code, kParseError);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodeResourceLimit) {
  ::setenv("CI_SPECTRA_MAX_N", "50", 1);
  const auto r = invoke({"spectrum", "--random-seed", "1", "--p", "3", "--n", "4", "--full"});
  ::unsetenv("CI_SPECTRA_MAX_N");
  EXPECT_EQ(r.code, kResourceLimit) << r.err;
  EXPECT_EQ(invoke({"crosscheck", "--p", "3", "--n", "3", "--exhaustive"}).code, kResourceLimit);
}

TEST(AnalysisJson, RoundTrip) {
  const auto result = analyze(testing::symmetric_cubic(), AnalyzeOptions{true, true});
  const auto back = analysis_from_json(to_json(result));
  EXPECT_EQ(to_json(back), to_json(result));
  EXPECT_EQ(back.reports.size(), 4u);
}

}  // namespace
}  // namespace cispectra::cli
