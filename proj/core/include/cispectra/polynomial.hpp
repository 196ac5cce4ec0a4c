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

// Polynomial expressions over F_p, used to define functions by formula:
//
//   expr   := [sign] term { sign term }
//   term   := factor { "*" factor }
//   factor := integer | "x" index [ "^" integer ]
//   sign   := "+" | "-"
//
// Whitespace is ignored, variable indices are 1-based and every coefficient
// and product is reduced mod p.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cispectra/ptable.hpp"

namespace cispectra {

struct Factor {
  std::uint32_t variable;  // 1-based
  std::uint64_t exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
  std::uint32_t coefficient;  // already reduced mod p
  std::vector<Factor> factors;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial(std::uint32_t p, std::uint32_t n, std::vector<Term> terms);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Value at one point (digits[i] = x_{i+1}).
  std::uint32_t evaluate(std::span<const std::uint32_t> digits) const;

  /// Truth table over all of F_p^n.
  PFunction to_function() const;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::vector<Term> terms_;
};

/// Throws ParseError with the offending offset.
Polynomial parse_polynomial_expression(std::string_view text, std::uint32_t p, std::uint32_t n);

PFunction parse_polynomial(std::string_view text, std::uint32_t p, std::uint32_t n);

/// a^e mod p with 0^0 = 1.
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p);

}  // namespace cispectra
