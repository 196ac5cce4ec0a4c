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

// Test-only helpers: fixed inputs and brute-force oracles that do not share
// code paths with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cispectra/ptable.hpp"

namespace cispectra::testing {

inline constexpr const char* kSymmetricCubicPolynomial =
    "x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4 + x1*x2 + x2*x3 + x3*x4 + x1*x3 + x1*x4 + x2*x4";

// Truth table of kSymmetricCubicPolynomial at p = 3, n = 4, produced by an
// independent evaluator (x1 least significant).
inline constexpr const char* kSymmetricCubicTable =
    "000012021012111210021210102012111210111111111210111012021210102210111012102012222";

inline PFunction symmetric_cubic() {
  std::vector<std::uint32_t> table;
  for (const char* c = kSymmetricCubicTable; *c != '\0'; ++c) table.push_back(static_cast<std::uint32_t>(*c - '0'));
  return PFunction(3, 4, std::move(table));
}

inline PFunction table_of(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> table) {
  return PFunction(p, n, std::move(table));
}

inline PFunction linear_sum(std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> table(static_cast<std::size_t>(std::pow(p, n)));
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::uint64_t s = 0;
    for (auto r = k; r > 0; r /= p) s += r % p;
    table[k] = static_cast<std::uint32_t>(s % p);
  }
  return PFunction(p, n, std::move(table));
}

/// Function number `index` in the exhaustive enumeration of F_p^n -> F_p.
inline PFunction nth_function(std::uint32_t p, std::uint32_t n, std::uint64_t index) {
  std::vector<std::uint32_t> table(static_cast<std::size_t>(std::pow(p, n)));
  for (auto& v : table) {
    v = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return PFunction(p, n, std::move(table));
}

inline std::uint64_t function_count(std::uint32_t p, std::uint32_t n) {
  return static_cast<std::uint64_t>(std::pow(p, std::pow(p, n)));
}

/// Symmetric function from a value per multiset of digits.
inline PFunction random_symmetric(std::uint32_t p, std::uint32_t n, std::mt19937_64& rng) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> orbit_value;
  std::vector<std::uint32_t> table(static_cast<std::size_t>(std::pow(p, n)));
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::vector<std::uint32_t> digits(n);
    auto r = k;
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    std::sort(digits.begin(), digits.end());
    auto [it, inserted] = orbit_value.try_emplace(digits, 0);
    if (inserted) it->second = static_cast<std::uint32_t>(rng() % p);
    table[k] = it->second;
  }
  return PFunction(p, n, std::move(table));
}

/// f(x) = h(c . x) with every c_i nonzero: correlation-immune of order n-1.
inline PFunction random_composed_linear(std::uint32_t p, std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(n), h(p);
  for (auto& ci : c) ci = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
  for (auto& hv : h) hv = static_cast<std::uint32_t>(rng() % p);
  std::vector<std::uint32_t> table(static_cast<std::size_t>(std::pow(p, n)));
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::uint64_t s = 0;
    auto r = k;
    for (std::uint32_t i = 0; i < n; ++i, r /= p) s += c[i] * (r % p);
    table[k] = h[s % p];
  }
  return PFunction(p, n, std::move(table));
}

/// F_f(j) = sum_k omega^f(k) xi^(-k j), straight from the definition.
inline std::complex<double> naive_dft(const PFunction& f, std::uint64_t j) {
  const double n_total = static_cast<double>(f.size());
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double angle = 2.0 * std::numbers::pi *
                         (static_cast<double>(f[k]) / f.p() -
                          static_cast<double>((k * j) % f.size()) / n_total);
    acc += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

/// Boolean Walsh-Hadamard value sum_x (-1)^(f(x) + c.x), p = 2 only.
inline long walsh(const PFunction& f, std::uint64_t c_mask) {
  long sum = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    const int parity = (f[x] + __builtin_popcountll(x & c_mask)) & 1;
    sum += parity ? -1 : 1;
  }
  return sum;
}

}  // namespace cispectra::testing
