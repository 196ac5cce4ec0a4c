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

// Independent characterizations of correlation immunity, used to cross-check
// the spectral test. Everything here is exact integer or Z[omega] arithmetic;
// probabilities appear only as cross-multiplied counts.
//
// Vectors c in F_p^n are enumerated in table order (c_1 least significant),
// restricted to 1 <= wt(c) <= m. Variable subsets are enumerated as increasing
// tuples in lexicographic order. Witnesses always name the first failure in
// that order.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cispectra/cyclotomic.hpp"
#include "cispectra/ptable.hpp"

namespace cispectra {

struct OracleCheck {
  bool holds = true;
  std::optional<std::string> witness;
};

/// p^m * #{x : f(x) = t, x_S = a} == #{x : f(x) = t} for every m-subset S,
/// assignment a and value t.
OracleCheck check_ci_definition(const PFunction& f, std::uint32_t m);
bool ci_oracle_definition(const PFunction& f, std::uint32_t m);

/// sum_x omega^(f(x) - c.x), i.e. p^n times the Chrestenson cyclic spectrum.
CycloElement chrestenson_cyclic(const PFunction& f, std::span<const std::uint32_t> c);
OracleCheck check_ci_chrestenson_cyclic(const PFunction& f, std::uint32_t m);
bool ci_oracle_chrestenson_cyclic(const PFunction& f, std::uint32_t m);

/// sum_x f(x) omega^(c.x) with f(x) taken as an integer in [0, p); p^n times
/// the Chrestenson linear spectrum.
CycloElement chrestenson_linear(const PFunction& f, std::span<const std::uint32_t> c);
/// Vanishing of chrestenson_linear(f + a, c) for every output shift
/// a in F_p ((f + a)(x) = f(x) + a mod p) and every c of weight 1..m.
OracleCheck check_ci_chrestenson_linear(const PFunction& f, std::uint32_t m);
bool ci_oracle_chrestenson_linear(const PFunction& f, std::uint32_t m);

/// entries[i * p + j] = #{x : c.x = i and f(x) = j}.
struct CountMatrix {
  std::uint32_t p = 0;
  Digits c;
  std::vector<std::uint64_t> entries;

  std::uint64_t operator()(std::uint32_t i, std::uint32_t j) const { return entries[i * p + j]; }
  bool rows_identical() const;
  std::string to_string() const;
};

CountMatrix count_matrix(const PFunction& f, std::span<const std::uint32_t> c);

struct MatrixCheck {
  bool holds = true;
  std::optional<CountMatrix> witness;
};

MatrixCheck matrix_test(const PFunction& f, std::uint32_t m);

/// Each preimage W_i = f^-1(i), as an array of rows, must be an orthogonal
/// array of strength m: every pattern on every m columns appears |W_i| / p^m
/// times (false outright if p^m does not divide |W_i|).
OracleCheck check_orthogonal_array(const PFunction& f, std::uint32_t m);
bool orthogonal_array_test(const PFunction& f, std::uint32_t m);

/// Counting form of m-resiliency: every restriction fixing m variables is
/// balanced on its p^(n-m) remaining points. m = 0 is plain balancedness.
OracleCheck check_resilient_counting(const PFunction& f, std::uint32_t m);
bool resilient_oracle_counting(const PFunction& f, std::uint32_t m);

enum class Method : std::uint8_t {
  spectral,
  definition,
  chrestenson_cyclic,
  chrestenson_linear,
  matrix,
  orthogonal_array,
};

inline constexpr std::array<Method, 6> kAllMethods = {
    Method::spectral,           Method::definition, Method::chrestenson_cyclic,
    Method::chrestenson_linear, Method::matrix,     Method::orthogonal_array,
};

std::string_view method_name(Method method);

struct MethodReport {
  std::uint32_t m = 0;
  std::array<bool, kAllMethods.size()> verdicts{};
  std::array<std::optional<std::string>, kAllMethods.size()> witnesses{};
  bool consensus = true;

  bool verdict(Method method) const { return verdicts[static_cast<std::size_t>(method)]; }
  const std::optional<std::string>& witness(Method method) const {
    return witnesses[static_cast<std::size_t>(method)];
  }
};

/// Runs all six methods at order m (1 <= m <= n).
MethodReport consensus(const PFunction& f, std::uint32_t m);

}  // namespace cispectra
