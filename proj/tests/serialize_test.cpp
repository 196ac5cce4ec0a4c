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

#include "cispectra/serialize.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "cispectra/error.hpp"
#include "test_support.hpp"

namespace cispectra {
namespace {

bool bit_identical(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i].real()) != std::bit_cast<std::uint64_t>(b[i].real())) return false;
    if (std::bit_cast<std::uint64_t>(a[i].imag()) != std::bit_cast<std::uint64_t>(b[i].imag())) return false;
  }
  return true;
}

TEST(SpectrumDumpJson, RoundTripIsBitIdentical) {
  std::mt19937_64 rng(99);
  for (auto [p, n] : {std::pair{2u, 5u}, {3u, 4u}, {5u, 2u}, {7u, 2u}}) {
    const auto dump = spectrum_dump(random_function(p, n, rng()));
    for (int indent : {-1, 2}) {
      const auto back = spectrum_dump_from_json(to_json(dump, indent));
      EXPECT_EQ(back.p, p);
      EXPECT_EQ(back.n, n);
      EXPECT_TRUE(bit_identical(back.dft, dump.dft));
      EXPECT_TRUE(bit_identical(back.autocorrelation, dump.autocorrelation));
    }
  }
}

TEST(SpectrumDumpJson, Malformed) {
  EXPECT_THROW(spectrum_dump_from_json("{"), ParseError);
  EXPECT_THROW(spectrum_dump_from_json("[]"), ParseError);
  EXPECT_THROW(spectrum_dump_from_json(R"({"p": 3, "n": 1})"), ParseError);
  EXPECT_THROW(spectrum_dump_from_json(R"({"p": 3, "n": 1, "dft": [[1]], "autocorrelation": []})"), ParseError);
}

TEST(MethodReportJson, RoundTrip) {
  for (const auto& f : {testing::symmetric_cubic(), testing::linear_sum(3, 4)}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const auto report = consensus(f, m);
      const auto back = method_report_from_json(to_json(report));
      EXPECT_EQ(back.m, report.m);
      EXPECT_EQ(back.verdicts, report.verdicts);
      EXPECT_EQ(back.witnesses, report.witnesses);
      EXPECT_EQ(back.consensus, report.consensus);
    }
  }
}

TEST(MethodReportJson, Malformed) {
  EXPECT_THROW(method_report_from_json("not json"), ParseError);
  EXPECT_THROW(method_report_from_json(R"({"m": 1})"), ParseError);
}

}  // namespace
}  // namespace cispectra
