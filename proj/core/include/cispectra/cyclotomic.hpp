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

// Exact arithmetic in Z[zeta] for zeta a primitive d-th root of unity,
// d = p^m. Elements are integer coordinate vectors in the power basis
// {1, zeta, ..., zeta^(phi(d)-1)}, phi(d) = p^m - p^(m-1). This basis is
// linearly independent over Q, so an element is zero iff every coordinate is.
//
// Exponents at or above phi(d) are folded with the cyclotomic relation
//
//     Phi_{p^m}(z) = sum_{j=0}^{p-1} z^(j p^(m-1)),
//
// which gives zeta^((p-1) p^(m-1) + r) = -sum_{j=0}^{p-2} zeta^(j p^(m-1) + r).
//
// For complex output zeta is exp(+2 pi i / p^m). Zero tests do not depend on
// that choice because any other primitive root is a Galois conjugate.
//
// Only addition is provided. Addition is overflow-checked.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cispectra {

class CycloElement {
 public:
  /// `coeffs` must have exactly phi(p^m) entries.
  CycloElement(std::uint32_t p, std::uint32_t m, std::vector<std::int64_t> coeffs);

  static CycloElement zero(std::uint32_t p, std::uint32_t m);
  static CycloElement one(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  /// d = p^m.
  std::uint64_t order() const noexcept { return order_; }
  /// phi(d), the number of coordinates.
  std::size_t degree() const noexcept { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  std::complex<double> to_complex() const;

  /// "p m : c0 c1 ... c_{phi-1}"
  std::string to_string() const;

  CycloElement& operator+=(const CycloElement& other);
  friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs) { return lhs += rhs; }
  friend bool operator==(const CycloElement&, const CycloElement&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t order_;
  std::vector<std::int64_t> coeffs_;
};

/// zeta^e; e is reduced mod p^m first (negative exponents allowed).
CycloElement root_power(std::uint32_t p, std::uint32_t m, std::int64_t e);

/// omega^a with omega = zeta^(p^(m-1)) the primitive p-th root; 0 <= a < p.
CycloElement embed_omega(std::uint32_t p, std::uint32_t m, std::uint32_t a);

/// Throws DomainError on level mismatch, OverflowError on wraparound.
CycloElement add(const CycloElement& a, const CycloElement& b);

inline bool is_zero(const CycloElement& a) noexcept { return a.is_zero(); }
inline std::complex<double> to_complex(const CycloElement& a) { return a.to_complex(); }

/// sum_e counts[e] * zeta^e over e in [0, p^m). counts.size() must be p^m.
CycloElement sum_of_root_powers(std::uint32_t p, std::uint32_t m,
                                std::span<const std::int64_t> counts);

/// Inverse of CycloElement::to_string.
CycloElement parse_cyclo_element(std::string_view text);

}  // namespace cispectra
