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

#include "cispectra/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "cispectra/error.hpp"
#include "points.hpp"

namespace cispectra {

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Polynomial::Polynomial(std::uint32_t p, std::uint32_t n, std::vector<Term> terms)
    : p_(p), n_(n), terms_(std::move(terms)) {
  if (!is_prime(p)) throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("a polynomial needs at least one variable");
  for (const auto& term : terms_) {
    if (term.coefficient >= p) throw DomainError("coefficient not reduced mod p");
    for (const auto& factor : term.factors)
      if (factor.variable < 1 || factor.variable > n)
        throw DomainError("variable x" + std::to_string(factor.variable) + " outside [1, n]");
  }
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> digits) const {
  if (digits.size() != n_) throw DomainError("evaluate: point has wrong dimension");
  std::uint64_t sum = 0;
  for (const auto& term : terms_) {
    std::uint64_t product = term.coefficient;
    for (const auto& factor : term.factors)
      product = product * pow_mod(digits[factor.variable - 1], factor.exponent, p_) % p_;
    sum = (sum + product) % p_;
  }
  return static_cast<std::uint32_t>(sum);
}

PFunction Polynomial::to_function() const {
  // Per-factor power tables: powers[digit] = digit^exponent mod p.
  struct CompiledFactor {
    std::uint32_t variable;
    std::vector<std::uint32_t> powers;
  };
  std::vector<std::pair<std::uint32_t, std::vector<CompiledFactor>>> compiled;
  for (const auto& term : terms_) {
    std::vector<CompiledFactor> factors;
    for (const auto& factor : term.factors) {
      CompiledFactor cf{factor.variable, std::vector<std::uint32_t>(p_)};
      for (std::uint32_t d = 0; d < p_; ++d) cf.powers[d] = pow_mod(d, factor.exponent, p_);
      factors.push_back(std::move(cf));
    }
    compiled.emplace_back(term.coefficient, std::move(factors));
  }

  std::vector<std::uint32_t> table(table_size(p_, n_));
  detail::PointOdometer point(p_, n_);
  for (auto& value : table) {
    std::uint64_t sum = 0;
    for (const auto& [coefficient, factors] : compiled) {
      std::uint64_t product = coefficient;
      for (const auto& f : factors) product = product * f.powers[point.digit(f.variable)] % p_;
      sum += product;
    }
    value = static_cast<std::uint32_t>(sum % p_);
    point.advance();
  }
  return PFunction(p_, n_, std::move(table));
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::uint32_t p, std::uint32_t n)
      : text_(text), p_(p), n_(n) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      terms.push_back(term(negative));
      skip_space();
      if (pos_ >= text_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      negative = c == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  Term term(bool negative) {
    Term t{1 % p_, {}};
    std::uint64_t coefficient = 1;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("expected a number or variable", pos_);
      const char c = peek();
      if (c == 'x' || c == 'X') {
        t.factors.push_back(variable());
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        coefficient = coefficient * (integer("coefficient") % p_) % p_;
      } else {
        throw ParseError(std::string("expected a number or variable, found '") + c + "'", pos_);
      }
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (negative) coefficient = (p_ - coefficient) % p_;
    t.coefficient = static_cast<std::uint32_t>(coefficient);
    return t;
  }

  Factor variable() {
    const auto start = pos_;
    ++pos_;  // 'x'
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable index after 'x'", pos_);
    const auto index = integer("variable index");
    if (index < 1 || index > n_)
      throw ParseError("variable x" + std::to_string(index) + " outside [1, " + std::to_string(n_) + "]",
                       start);
    std::uint64_t exponent = 1;
    skip_space();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected an exponent after '^'", pos_);
      exponent = integer("exponent");
    }
    return Factor{static_cast<std::uint32_t>(index), exponent};
  }

  std::uint64_t integer(const char* what) {
    const auto start = pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range)
      throw ParseError(std::string(what) + " does not fit in 64 bits", start);
    if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::uint32_t p_;
  std::uint32_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial_expression(std::string_view text, std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("a polynomial needs at least one variable");
  return Polynomial(p, n, PolynomialParser(text, p, n).parse());
}

PFunction parse_polynomial(std::string_view text, std::uint32_t p, std::uint32_t n) {
  return parse_polynomial_expression(text, p, n).to_function();
}

}  // namespace cispectra
