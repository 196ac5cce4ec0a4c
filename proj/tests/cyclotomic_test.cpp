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

#include "cispectra/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cispectra/error.hpp"

namespace cispectra {
namespace {

using Coeffs = std::vector<std::int64_t>;

Coeffs coeffs_of(const CycloElement& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

std::complex<double> unit_root(std::int64_t e, std::uint64_t d) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d));
}

TEST(RootPower, Examples) {
  EXPECT_EQ(coeffs_of(root_power(2, 1, 1)), (Coeffs{-1}));
  EXPECT_EQ(coeffs_of(root_power(3, 1, 2)), (Coeffs{-1, -1}));
  EXPECT_EQ(coeffs_of(root_power(2, 2, 3)), (Coeffs{0, -1}));
  EXPECT_EQ(root_power(3, 2, -1), root_power(3, 2, 8));
  EXPECT_EQ(root_power(5, 1, 12), root_power(5, 1, 2));
}

TEST(RootPower, AgreesWithComplexRoots) {
  for (auto [p, m] : {std::pair{2u, 1u}, {2u, 3u}, {3u, 2u}, {5u, 1u}}) {
    const auto d = static_cast<std::int64_t>(std::pow(p, m));
    for (std::int64_t e = 0; e < d; ++e)
      ASSERT_LT(std::abs(root_power(p, m, e).to_complex() - unit_root(e, d)), 1e-9)
          << "p=" << p << " m=" << m << " e=" << e;
  }
}

TEST(Add, Examples) {
  const auto a = root_power(3, 2, 5);
  EXPECT_EQ(a + CycloElement::zero(3, 2), a);
  EXPECT_EQ(coeffs_of(add(root_power(3, 1, 1), root_power(3, 1, 1))), (Coeffs{0, 2}));
}

TEST(Add, SumOfAllRootsVanishesExactly) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t m = 1; std::pow(p, m) <= 256; ++m) {
      const auto d = static_cast<std::int64_t>(std::pow(p, m));
      auto sum = CycloElement::zero(p, m);
      for (std::int64_t e = 0; e < d; ++e) sum += root_power(p, m, e);
      ASSERT_TRUE(sum.is_zero()) << "p=" << p << " m=" << m;
      ASSERT_TRUE(is_zero(sum));
    }
  }
}

TEST(Add, Errors) {
  EXPECT_THROW(add(root_power(3, 1, 0), root_power(3, 2, 0)), DomainError);
  EXPECT_THROW(add(root_power(3, 1, 0), root_power(2, 1, 0)), DomainError);
  const CycloElement big(2, 1, {std::numeric_limits<std::int64_t>::max()});
  EXPECT_THROW(big + root_power(2, 1, 0), OverflowError);
  const CycloElement small(2, 1, {std::numeric_limits<std::int64_t>::min()});
  EXPECT_THROW(small + root_power(2, 1, 1), OverflowError);
}

TEST(IsZero, Examples) {
  EXPECT_TRUE(CycloElement::zero(5, 2).is_zero());
  EXPECT_FALSE(root_power(3, 1, 1).is_zero());
}

TEST(IsZero, OnlyTheZeroVectorIsZero) {
  std::mt19937_64 rng(5);
  const std::pair<std::uint32_t, std::uint32_t> levels[] = {{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [p, m] = levels[trial % 6];
    const auto d = static_cast<std::size_t>(std::pow(p, m));
    Coeffs c(d - d / p);
    do {
      for (auto& v : c) v = static_cast<std::int64_t>(rng() % 21) - 10;
    } while (std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; }));
    const CycloElement a(p, m, c);
    ASSERT_FALSE(a.is_zero());
    ASSERT_GT(std::abs(a.to_complex()), 1e-9);
  }
}

TEST(ToComplex, Homomorphism) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Coeffs a(6), b(6);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % 2001) - 1000;
    for (auto& v : b) v = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const CycloElement x(3, 2, a), y(3, 2, b);
    ASSERT_LT(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())), 1e-9);
  }
}

TEST(ToComplex, Examples) {
  EXPECT_EQ(CycloElement::zero(3, 1).to_complex(), std::complex<double>(0.0, 0.0));
  EXPECT_LT(std::abs(root_power(2, 1, 1).to_complex() - std::complex<double>(-1.0, 0.0)), 1e-12);
  EXPECT_LT(std::abs(root_power(2, 2, 1).to_complex() - std::complex<double>(0.0, 1.0)), 1e-12);
}

TEST(EmbedOmega, Examples) {
  EXPECT_EQ(coeffs_of(embed_omega(3, 2, 0)), (Coeffs{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(coeffs_of(embed_omega(3, 1, 1)), (Coeffs{0, 1}));
  EXPECT_EQ(coeffs_of(embed_omega(3, 2, 1)), (Coeffs{0, 0, 0, 1, 0, 0}));
  EXPECT_THROW(embed_omega(3, 2, 3), DomainError);
  // omega has order p inside every level.
  for (std::uint32_t a = 0; a < 5; ++a)
    EXPECT_LT(std::abs(embed_omega(5, 2, a).to_complex() - unit_root(a, 5)), 1e-9);
}

CycloElement negated(const CycloElement& a) {
  auto c = coeffs_of(a);
  for (auto& v : c) v = -v;
  return CycloElement(a.p(), a.m(), c);
}

TEST(SumOfRootPowers, MatchesRepeatedAddition) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> counts(27);
    auto expected = CycloElement::zero(3, 3);
    for (std::int64_t e = 0; e < 27; ++e) {
      counts[e] = static_cast<std::int64_t>(rng() % 7) - 3;
      const auto term = counts[e] > 0 ? root_power(3, 3, e) : negated(root_power(3, 3, e));
      for (std::int64_t r = 0; r < std::abs(counts[e]); ++r) expected += term;
    }
    ASSERT_EQ(sum_of_root_powers(3, 3, counts), expected);
  }
  EXPECT_THROW(sum_of_root_powers(3, 2, std::vector<std::int64_t>(8)), DomainError);
}

TEST(Serialization, RoundTrip) {
  const CycloElement a(3, 2, {6, -6, -6, 0, -6, -6});
  EXPECT_EQ(a.to_string(), "3 2 : 6 -6 -6 0 -6 -6");
  EXPECT_EQ(parse_cyclo_element(a.to_string()), a);
  EXPECT_THROW(parse_cyclo_element("3 2 6 -6"), ParseError);
  EXPECT_THROW(parse_cyclo_element("3 2 : 1 2"), DomainError);
}

TEST(CycloElement, ValidatesLevel) {
  EXPECT_THROW(CycloElement(4, 1, {0, 0}), DomainError);
  EXPECT_THROW(CycloElement(3, 0, {}), DomainError);
  EXPECT_THROW(CycloElement(3, 1, {0}), DomainError);
}

}  // namespace
}  // namespace cispectra
