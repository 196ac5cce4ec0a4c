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

// Fourier-spectral tests for correlation immunity and resiliency.
//
// The DFT of f is F_f(j) = sum_k omega^f(k) xi^(-k j) with omega = e^(2 pi i/p)
// and xi = e^(2 pi i/p^n). At the critical locations j = c * p^(n-m),
// c = 1 .. p-1, the kernel xi^(-k j) only depends on the lowest m digits of k,
// so F_f(c p^(n-m)) is an element of Z[zeta], zeta = e^(2 pi i/p^m), and can be
// evaluated exactly.
//
// Correlation immunity of order m holds iff the associated polynomial of every
// variable-permuted f_pi is divisible by Phi_{p^m}(z), i.e. iff F_{f_pi}
// vanishes at every root of Phi_{p^m}. Those roots are the locations
// c * p^(n-m) with gcd(c, p) = 1; locations whose c agree mod p are Galois
// conjugate over Q(omega), so c = 1 .. p-1 covers all of them. For p = 2 this
// is the single location p^(n-m).
//
// The value only depends on which variables f_pi puts in positions 1..m, so
// permutations are enumerated as ordered m-tuples (see VariableTuple).

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cispectra/cyclotomic.hpp"
#include "cispectra/ptable.hpp"

namespace cispectra {

/// Exact F_{f_pi}(conjugate * p^(n-m)) where pi places variable tuple[i]
/// at position i (i = 1..m); i.e. the sum over all points x of
///
///     zeta^( f(x) p^(m-1) - conjugate * sum_i x_{tuple[i]} p^(i-1) ).
///
/// Result lives at level p^m. `conjugate` must lie in [1, p).
CycloElement exact_spectrum_at_critical(const PFunction& f, std::uint32_t m,
                                        const VariableTuple& tuple,
                                        std::uint32_t conjugate = 1);

/// Tuple whose exact value equals F_{f_pi}(p^(n-m)) for f_pi = apply_permutation(f, pi):
/// (pi^-1(1), ..., pi^-1(m)).
VariableTuple critical_tuple(const Permutation& pi, std::uint32_t m);

struct CiWitness {
  VariableTuple tuple;
  std::uint32_t conjugate;
  CycloElement value;
};

struct CiCheck {
  bool holds = true;
  /// Lexicographically first (tuple, conjugate) with a nonzero value.
  std::optional<CiWitness> witness;
};

/// Order-m test over all n!/(n-m)! ordered tuples, in lexicographic order,
/// stopping at the first nonzero value.
CiCheck check_ci(const PFunction& f, std::uint32_t m);
bool is_ci(const PFunction& f, std::uint32_t m);

/// Number of ordered m-tuples with at least one nonvanishing conjugate.
std::uint64_t count_nonvanishing_tuples(const PFunction& f, std::uint32_t m);

/// Largest m with is_ci(f, m); scans upward and stops at the first failure.
std::uint32_t ci_order(const PFunction& f);

/// Symmetric functions only (DomainError otherwise): the identity tuple alone.
CiCheck check_ci_symmetric(const PFunction& f, std::uint32_t m);
bool is_ci_symmetric(const PFunction& f, std::uint32_t m);
std::uint32_t ci_order_symmetric(const PFunction& f);

/// Coefficients of F_pi(z) mod (z^(p^m) - 1) for pi placing `subset` first:
/// entry a (a = sum_i a_i p^(i-1)) is sum over points with x_{subset[i]} = a_i
/// of omega^f(x), as an element of Z[omega] (level p).
std::vector<CycloElement> resiliency_residue(const PFunction& f, const VariableTuple& subset);

struct ResiliencyWitness {
  VariableTuple subset;
  Digits assignment;
};

struct ResiliencyCheck {
  bool holds = true;
  std::optional<ResiliencyWitness> witness;
};

/// m = 0: balancedness. Otherwise every residue coefficient vanishes for every
/// increasing m-subset (order inside a subset only permutes coefficients).
ResiliencyCheck check_resilient(const PFunction& f, std::uint32_t m);
bool is_resilient(const PFunction& f, std::uint32_t m);

/// -1 when f is unbalanced, else the largest m with is_resilient(f, m).
int resiliency_order(const PFunction& f);

// Floating-point transforms. All throw SizeLimitError when p^n exceeds
// desk_size_limit().

/// Direct summation for N <= kDirectDftLimit, radix-p FFT above.
inline constexpr std::size_t kDirectDftLimit = 4096;

std::vector<std::complex<double>> dft_float(const PFunction& f);

/// omega^f(k) for k = 0 .. N-1.
std::vector<std::complex<double>> exponentiated_sequence(const PFunction& f);

/// (1/N) sum_j values[j] xi^(k j); `p` is the radix (values.size() must be a power of p).
std::vector<std::complex<double>> inverse_dft(std::span<const std::complex<double>> values,
                                              std::uint32_t p);

/// C_f(t) = sum_k omega^(f(k+t) - f(k)), index arithmetic mod N.
std::vector<std::complex<double>> autocorrelation(const PFunction& f);

/// Magnitudes below this are reported as zero; verdicts never use it.
inline double float_zero_threshold(std::size_t table_size) { return 1e-6 * static_cast<double>(table_size); }

struct SpectrumDump {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::complex<double>> dft;
  std::vector<std::complex<double>> autocorrelation;
};

SpectrumDump spectrum_dump(const PFunction& f);

}  // namespace cispectra
