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

// Truth tables of functions f: F_p^n -> F_p.
//
// Point ordering: the table entry at index k holds f(x_1, ..., x_n) where
//
//     k = x_1 + x_2 * p + ... + x_n * p^(n-1)
//
// i.e. x_1 is the LEAST significant base-p digit. Every public interface
// numbers variables from 1 (x_1 ... x_n); digit vectors are stored 0-based,
// so digits[i - 1] is x_i.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cispectra {

using Digits = std::vector<std::uint32_t>;

/// Hard cap on table length; anything at or above 2^31 entries is rejected.
inline constexpr std::uint64_t kMaxTableSize = (std::uint64_t{1} << 31) - 1;

/// Default practical limit on p^n, overridable with CI_SPECTRA_MAX_N.
inline constexpr std::uint64_t kDefaultDeskLimit = 1'000'000;

/// Table-size limit for the float transforms and the CLI. Reads the
/// CI_SPECTRA_MAX_N environment variable on every call; falls back to
/// kDefaultDeskLimit when unset or unparsable.
std::uint64_t desk_size_limit();

bool is_prime(std::uint64_t value);

/// p^n, throwing SizeLimitError when it exceeds kMaxTableSize.
std::uint64_t table_size(std::uint32_t p, std::uint32_t n);

/// k = sum_i digits[i] * p^i.
std::uint64_t index_of(std::span<const std::uint32_t> digits, std::uint32_t p);

/// Inverse of index_of: the n base-p digits of k, least significant first.
Digits digits_of(std::uint64_t k, std::uint32_t p, std::uint32_t n);

class PFunction {
 public:
  /// Validates primality of p, the table length p^n and every entry.
  PFunction(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> table);

  static PFunction constant(std::uint32_t p, std::uint32_t n, std::uint32_t value);

  /// Builds the table by calling `fn(digits)` at every point, in table order.
  /// The result of `fn` is reduced mod p.
  static PFunction from_points(
      std::uint32_t p, std::uint32_t n,
      const std::function<std::uint64_t(std::span<const std::uint32_t>)>& fn);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::span<const std::uint32_t> table() const noexcept { return table_; }
  std::uint32_t operator[](std::size_t k) const { return table_[k]; }
  std::uint32_t at(std::span<const std::uint32_t> digits) const;

  /// Output histogram: counts[t] = #{x : f(x) = t}.
  std::vector<std::uint64_t> value_counts() const;

  friend bool operator==(const PFunction&, const PFunction&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
};

/// A bijection on {1, ..., n}; `(*this)(i)` is pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> mapping);

  static Permutation identity(std::uint32_t n);
  /// Swaps positions i and j (1-based).
  static Permutation transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j);
  static Permutation random(std::uint32_t n, std::mt19937_64& rng);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(mapping_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return mapping_.at(i - 1); }
  std::span<const std::uint32_t> mapping() const noexcept { return mapping_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> mapping_;
};

/// (lhs o rhs)(i) = lhs(rhs(i)).
Permutation compose(const Permutation& lhs, const Permutation& rhs);

/// Ordered list of m distinct variable indices from {1, ..., n}.
class VariableTuple {
 public:
  VariableTuple(std::vector<std::uint32_t> indices, std::uint32_t n);

  /// (1, 2, ..., m).
  static VariableTuple identity(std::uint32_t m, std::uint32_t n);

  std::size_t size() const noexcept { return indices_.size(); }
  std::uint32_t operator[](std::size_t i) const { return indices_[i]; }
  std::span<const std::uint32_t> indices() const noexcept { return indices_; }
  std::string to_string() const;

  friend bool operator==(const VariableTuple&, const VariableTuple&) = default;

 private:
  std::vector<std::uint32_t> indices_;
};

/// g(x_1, ..., x_n) = f(x_pi(1), ..., x_pi(n)).
PFunction apply_permutation(const PFunction& f, const Permutation& pi);

/// Invariance under the n-1 adjacent transpositions, which generate S_n.
bool is_symmetric(const PFunction& f);

bool is_balanced(const PFunction& f);

/// Uniform table drawn from std::mt19937_64 seeded with `seed`. Each entry
/// takes one 64-bit draw, rejecting draws at or above the largest multiple
/// of p below 2^64, and is the accepted draw mod p.
PFunction random_function(std::uint32_t p, std::uint32_t n, std::uint64_t seed);

/// Visits all ordered m-tuples of distinct indices from {1..n} in
/// lexicographic order. Stops early when `visit` returns false; returns
/// false iff it stopped early.
bool for_each_ordered_tuple(std::uint32_t n, std::uint32_t m,
                            const std::function<bool(std::span<const std::uint32_t>)>& visit);

/// Same for increasing m-subsets of {1..n}.
bool for_each_subset(std::uint32_t n, std::uint32_t m,
                     const std::function<bool(std::span<const std::uint32_t>)>& visit);

// Truth-table text format:
//   line 1: "p n"
//   line 2: p^n whitespace-separated digits, k = 0 ... p^n - 1
PFunction parse_truth_table(std::string_view text);
PFunction read_truth_table(std::istream& in);
std::string format_truth_table(const PFunction& f);
void write_truth_table(std::ostream& out, const PFunction& f);

}  // namespace cispectra
