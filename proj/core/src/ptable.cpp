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

#include "cispectra/ptable.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cispectra/error.hpp"
#include "points.hpp"

namespace cispectra {

std::uint64_t desk_size_limit() {
  const char* env = std::getenv("CI_SPECTRA_MAX_N");
  if (env == nullptr) return kDefaultDeskLimit;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultDeskLimit;
  return std::min(value, kMaxTableSize);
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

std::uint64_t table_size(std::uint32_t p, std::uint32_t n) {
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    size *= p;
    if (size > kMaxTableSize)
      throw SizeLimitError("p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                           " exceeds the maximum table size 2^31 - 1");
  }
  return size;
}

std::uint64_t index_of(std::span<const std::uint32_t> digits, std::uint32_t p) {
  if (digits.empty()) throw DomainError("index_of: empty digit vector");
  if (p < 2) throw DomainError("index_of: modulus must be at least 2");
  table_size(p, static_cast<std::uint32_t>(digits.size()));
  std::uint64_t k = 0;
  std::uint64_t weight = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p)
      throw DomainError("index_of: digit x" + std::to_string(i + 1) + " = " +
                        std::to_string(digits[i]) + " is not below p = " + std::to_string(p));
    k += digits[i] * weight;
    weight *= p;
  }
  return k;
}

Digits digits_of(std::uint64_t k, std::uint32_t p, std::uint32_t n) {
  if (p < 2) throw DomainError("digits_of: modulus must be at least 2");
  if (k >= table_size(p, n))
    throw DomainError("digits_of: index " + std::to_string(k) + " out of range for p^n");
  Digits digits(n);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return digits;
}

// PFunction

PFunction::PFunction(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> table)
    : p_(p), n_(n), table_(std::move(table)) {
  if (!is_prime(p)) throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("a function needs at least one variable");
  const auto size = table_size(p, n);
  if (table_.size() != size)
    throw DomainError("truth table has " + std::to_string(table_.size()) +
                      " entries, expected p^n = " + std::to_string(size));
  for (std::size_t k = 0; k < table_.size(); ++k)
    if (table_[k] >= p)
      throw DomainError("table entry " + std::to_string(k) + " = " + std::to_string(table_[k]) +
                        " is not below p = " + std::to_string(p));
}

PFunction PFunction::constant(std::uint32_t p, std::uint32_t n, std::uint32_t value) {
  if (!is_prime(p)) throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  return PFunction(p, n, std::vector<std::uint32_t>(table_size(p, n), value));
}

PFunction PFunction::from_points(
    std::uint32_t p, std::uint32_t n,
    const std::function<std::uint64_t(std::span<const std::uint32_t>)>& fn) {
  if (!is_prime(p)) throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  const auto size = table_size(p, n);
  std::vector<std::uint32_t> table(size);
  detail::PointOdometer point(p, n);
  for (std::uint64_t k = 0; k < size; ++k, point.advance())
    table[k] = static_cast<std::uint32_t>(fn(point.digits()) % p);
  return PFunction(p, n, std::move(table));
}

std::uint32_t PFunction::at(std::span<const std::uint32_t> digits) const {
  if (digits.size() != n_) throw DomainError("point has wrong number of coordinates");
  return table_[index_of(digits, p_)];
}

std::vector<std::uint64_t> PFunction::value_counts() const {
  std::vector<std::uint64_t> counts(p_, 0);
  for (auto v : table_) ++counts[v];
  return counts;
}

// Permutation

Permutation::Permutation(std::vector<std::uint32_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size() + 1, false);
  for (auto v : mapping_) {
    if (v < 1 || v > mapping_.size() || seen[v])
      throw DomainError("permutation is not a bijection on {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 1u);
  return Permutation(std::move(mapping));
}

Permutation Permutation::transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("transposition index out of range");
  auto pi = identity(n);
  std::swap(pi.mapping_[i - 1], pi.mapping_[j - 1]);
  return pi;
}

Permutation Permutation::random(std::uint32_t n, std::mt19937_64& rng) {
  auto pi = identity(n);
  std::shuffle(pi.mapping_.begin(), pi.mapping_.end(), rng);
  return pi;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i)
    inv[mapping_[i] - 1] = static_cast<std::uint32_t>(i + 1);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw DomainError("compose: permutation sizes differ");
  std::vector<std::uint32_t> mapping(lhs.size());
  for (std::uint32_t i = 1; i <= lhs.size(); ++i) mapping[i - 1] = lhs(rhs(i));
  return Permutation(std::move(mapping));
}

// VariableTuple

VariableTuple::VariableTuple(std::vector<std::uint32_t> indices, std::uint32_t n)
    : indices_(std::move(indices)) {
  if (indices_.size() > n) throw DomainError("variable tuple longer than n");
  std::vector<bool> seen(n + 1, false);
  for (auto v : indices_) {
    if (v < 1 || v > n)
      throw DomainError("variable index " + std::to_string(v) + " outside [1, " +
                        std::to_string(n) + "]");
    if (seen[v]) throw DomainError("variable index " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

VariableTuple VariableTuple::identity(std::uint32_t m, std::uint32_t n) {
  std::vector<std::uint32_t> indices(m);
  std::iota(indices.begin(), indices.end(), 1u);
  return VariableTuple(std::move(indices), n);
}

std::string VariableTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(indices_[i]);
  }
  return out + ")";
}

// Predicates and transforms

PFunction apply_permutation(const PFunction& f, const Permutation& pi) {
  if (pi.size() != f.n())
    throw DomainError("apply_permutation: permutation acts on " + std::to_string(pi.size()) +
                      " variables, function has " + std::to_string(f.n()));
  const auto p = f.p();
  const auto n = f.n();
  std::vector<std::uint64_t> weight(n + 1);
  for (std::uint32_t i = 1; i <= n; ++i) weight[i] = detail::ipow(p, i - 1);
  // g(x) = f(y) with y_i = x_pi(i); so x_j lands at f-position pi^-1(j).
  const auto inv = pi.inverse();
  std::vector<std::uint64_t> target_weight(n);
  for (std::uint32_t j = 1; j <= n; ++j) target_weight[j - 1] = weight[inv(j)];

  std::vector<std::uint32_t> table(f.size());
  detail::PointOdometer point(p, n);
  for (std::size_t k = 0; k < table.size(); ++k, point.advance()) {
    std::uint64_t source = 0;
    for (std::uint32_t j = 0; j < n; ++j) source += point.digits()[j] * target_weight[j];
    table[k] = f[source];
  }
  return PFunction(p, n, std::move(table));
}

bool is_symmetric(const PFunction& f) {
  for (std::uint32_t i = 1; i < f.n(); ++i)
    if (apply_permutation(f, Permutation::transposition(f.n(), i, i + 1)) != f) return false;
  return true;
}

bool is_balanced(const PFunction& f) {
  const auto expected = f.size() / f.p();
  for (auto c : f.value_counts())
    if (c != expected) return false;
  return true;
}

PFunction random_function(std::uint32_t p, std::uint32_t n, std::uint64_t seed) {
  if (!is_prime(p)) throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  std::mt19937_64 engine(seed);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  std::vector<std::uint32_t> table(table_size(p, n));
  for (auto& v : table) {
    std::uint64_t draw;
    do {
      draw = engine();
    } while (draw >= limit);
    v = static_cast<std::uint32_t>(draw % p);
  }
  return PFunction(p, n, std::move(table));
}

bool for_each_ordered_tuple(std::uint32_t n, std::uint32_t m,
                            const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  if (m > n) throw DomainError("tuple length exceeds n");
  std::vector<std::uint32_t> tuple;
  std::vector<bool> used(n + 1, false);
  tuple.reserve(m);
  // Depth-first in lexicographic order.
  std::function<bool()> recurse = [&]() -> bool {
    if (tuple.size() == m) return visit(tuple);
    for (std::uint32_t v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple.push_back(v);
      const bool go_on = recurse();
      tuple.pop_back();
      used[v] = false;
      if (!go_on) return false;
    }
    return true;
  };
  return recurse();
}

bool for_each_subset(std::uint32_t n, std::uint32_t m,
                     const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  if (m > n) throw DomainError("subset size exceeds n");
  std::vector<std::uint32_t> subset(m);
  std::iota(subset.begin(), subset.end(), 1u);
  while (true) {
    if (!visit(subset)) return false;
    // Advance to the next combination in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0 && subset[i] == n - m + 1 + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return true;
    ++subset[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Text format

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::uint64_t unsigned_integer(const char* what) {
    skip_space();
    const auto start = pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " too large", start);
    if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PFunction parse_truth_table(std::string_view text) {
  TokenReader reader(text);
  const auto p_pos = reader.position();
  const auto p = reader.unsigned_integer("modulus p");
  const auto n = reader.unsigned_integer("arity n");
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
    throw ParseError("modulus " + std::to_string(p) + " is not prime", p_pos);
  if (n < 1 || n > 64) throw ParseError("arity must be in [1, 64]", p_pos);
  const auto size = table_size(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  std::vector<std::uint32_t> table;
  table.reserve(size);
  for (std::uint64_t k = 0; k < size; ++k) {
    if (reader.at_end())
      throw ParseError("truth table ends after " + std::to_string(k) + " of " +
                           std::to_string(size) + " entries",
                       reader.position());
    const auto pos = reader.position();
    const auto v = reader.unsigned_integer("table digit");
    if (v >= p) throw ParseError("table digit " + std::to_string(v) + " is not below p", pos);
    table.push_back(static_cast<std::uint32_t>(v));
  }
  if (!reader.at_end()) throw ParseError("trailing data after truth table", reader.position());
  return PFunction(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n), std::move(table));
}

PFunction read_truth_table(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_truth_table(text);
}

std::string format_truth_table(const PFunction& f) {
  std::ostringstream out;
  write_truth_table(out, f);
  return out.str();
}

void write_truth_table(std::ostream& out, const PFunction& f) {
  out << f.p() << ' ' << f.n() << '\n';
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k != 0) out << ' ';
    out << f[k];
  }
  out << '\n';
}

}  // namespace cispectra
