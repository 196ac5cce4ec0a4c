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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cispectra/error.hpp"
#include "cispectra/ptable.hpp"
#include "points.hpp"

namespace cispectra {

namespace {

std::uint64_t checked_order(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw DomainError("cyclotomic level: p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw DomainError("cyclotomic level: m must be at least 1");
  return table_size(p, m);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow");
  return r;
}

}  // namespace

CycloElement::CycloElement(std::uint32_t p, std::uint32_t m, std::vector<std::int64_t> coeffs)
    : p_(p), m_(m), order_(checked_order(p, m)), coeffs_(std::move(coeffs)) {
  const auto phi = order_ - order_ / p_;
  if (coeffs_.size() != phi)
    throw DomainError("cyclotomic element at level " + std::to_string(order_) + " needs " +
                      std::to_string(phi) + " coefficients, got " + std::to_string(coeffs_.size()));
}

CycloElement CycloElement::zero(std::uint32_t p, std::uint32_t m) {
  const auto d = checked_order(p, m);
  return CycloElement(p, m, std::vector<std::int64_t>(d - d / p, 0));
}

CycloElement CycloElement::one(std::uint32_t p, std::uint32_t m) { return root_power(p, m, 0); }

bool CycloElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::complex<double> CycloElement::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    sum += static_cast<double>(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
  }
  return sum;
}

std::string CycloElement::to_string() const {
  std::string out = std::to_string(p_) + " " + std::to_string(m_) + " :";
  for (auto c : coeffs_) out += " " + std::to_string(c);
  return out;
}

CycloElement& CycloElement::operator+=(const CycloElement& other) {
  if (p_ != other.p_ || m_ != other.m_)
    throw DomainError("cannot add cyclotomic elements of levels " + std::to_string(order_) +
                      " and " + std::to_string(other.order_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

CycloElement root_power(std::uint32_t p, std::uint32_t m, std::int64_t e) {
  const auto d = static_cast<std::int64_t>(checked_order(p, m));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
  counts[static_cast<std::size_t>(((e % d) + d) % d)] = 1;
  return sum_of_root_powers(p, m, counts);
}

CycloElement embed_omega(std::uint32_t p, std::uint32_t m, std::uint32_t a) {
  if (a >= p) throw DomainError("embed_omega: " + std::to_string(a) + " is not in F_p");
  const auto block = checked_order(p, m) / p;  // p^(m-1)
  return root_power(p, m, static_cast<std::int64_t>(a * block));
}

CycloElement add(const CycloElement& a, const CycloElement& b) { return a + b; }

CycloElement sum_of_root_powers(std::uint32_t p, std::uint32_t m,
                                std::span<const std::int64_t> counts) {
  const auto d = checked_order(p, m);
  if (counts.size() != d)
    throw DomainError("sum_of_root_powers: expected " + std::to_string(d) + " exponent counts");
  const auto block = d / p;
  const auto phi = d - block;
  std::vector<std::int64_t> coeffs(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(phi));
  // Top block: zeta^(phi + r) = -sum_{j<p-1} zeta^(j*block + r).
  for (std::uint64_t r = 0; r < block; ++r) {
    const auto c = counts[phi + r];
    if (c == 0) continue;
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      auto& slot = coeffs[j * block + r];
      slot = checked_sub(slot, c);
    }
  }
  return CycloElement(p, m, std::move(coeffs));
}

CycloElement parse_cyclo_element(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&](auto& value, const char* what) {
    skip();
    const auto start = pos;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, start);
    pos = static_cast<std::size_t>(ptr - text.data());
  };
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  number(p, "p");
  number(m, "m");
  skip();
  if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
  ++pos;
  std::vector<std::int64_t> coeffs;
  skip();
  while (pos < text.size()) {
    std::int64_t c = 0;
    number(c, "coefficient");
    coeffs.push_back(c);
    skip();
  }
  return CycloElement(p, m, std::move(coeffs));
}

}  // namespace cispectra
