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

#include "cispectra/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cispectra/error.hpp"
#include "fft.hpp"
#include "points.hpp"

namespace cispectra {

namespace {

void require_order(const PFunction& f, std::uint32_t m, std::uint32_t lowest) {
  if (m < lowest || m > f.n())
    throw DomainError("order m = " + std::to_string(m) + " outside [" + std::to_string(lowest) +
                      ", " + std::to_string(f.n()) + "]");
}

// joint[w * p + t] = #{x : sum_i x_{tuple[i]} p^(i-1) = w and f(x) = t}
std::vector<std::int64_t> joint_counts(const PFunction& f, std::span<const std::uint32_t> tuple) {
  const auto p = f.p();
  const auto m = static_cast<std::uint32_t>(tuple.size());
  std::vector<std::uint64_t> weight(m);
  for (std::uint32_t i = 0; i < m; ++i) weight[i] = detail::ipow(p, i);
  std::vector<std::int64_t> joint(detail::ipow(p, m) * p, 0);
  detail::PointOdometer point(p, f.n());
  for (std::size_t k = 0; k < f.size(); ++k, point.advance()) {
    std::uint64_t w = 0;
    for (std::uint32_t i = 0; i < m; ++i) w += point.digit(tuple[i]) * weight[i];
    ++joint[w * p + f[k]];
  }
  return joint;
}

CycloElement critical_from_joint(std::span<const std::int64_t> joint, std::uint32_t p,
                                 std::uint32_t m, std::uint32_t conjugate) {
  const auto d = detail::ipow(p, m);
  const auto block = d / p;
  std::vector<std::int64_t> exponent_counts(d, 0);
  for (std::uint64_t w = 0; w < d; ++w) {
    // -conjugate * w mod d
    const auto shift = (d - (conjugate * w) % d) % d;
    for (std::uint32_t t = 0; t < p; ++t) {
      const auto c = joint[w * p + t];
      if (c != 0) exponent_counts[(t * block + shift) % d] += c;
    }
  }
  return sum_of_root_powers(p, m, exponent_counts);
}

std::optional<CiWitness> first_nonvanishing(const PFunction& f, std::uint32_t m,
                                            std::span<const std::uint32_t> tuple) {
  const auto joint = joint_counts(f, tuple);
  for (std::uint32_t c = 1; c < f.p(); ++c) {
    auto value = critical_from_joint(joint, f.p(), m, c);
    if (!value.is_zero())
      return CiWitness{VariableTuple({tuple.begin(), tuple.end()}, f.n()), c, std::move(value)};
  }
  return std::nullopt;
}

void check_desk_size(const PFunction& f) {
  if (f.size() > desk_size_limit())
    throw SizeLimitError("p^n = " + std::to_string(f.size()) + " exceeds the size limit " +
                         std::to_string(desk_size_limit()) + " (raise with CI_SPECTRA_MAX_N)");
}

}  // namespace

CycloElement exact_spectrum_at_critical(const PFunction& f, std::uint32_t m,
                                        const VariableTuple& tuple, std::uint32_t conjugate) {
  require_order(f, m, 1);
  if (tuple.size() != m)
    throw DomainError("tuple " + tuple.to_string() + " does not have length m = " + std::to_string(m));
  for (auto v : tuple.indices())
    if (v > f.n()) throw DomainError("tuple index " + std::to_string(v) + " exceeds n");
  if (conjugate < 1 || conjugate >= f.p())
    throw DomainError("conjugate index must lie in [1, p)");
  return critical_from_joint(joint_counts(f, tuple.indices()), f.p(), m, conjugate);
}

VariableTuple critical_tuple(const Permutation& pi, std::uint32_t m) {
  const auto inv = pi.inverse();
  std::vector<std::uint32_t> indices(m);
  for (std::uint32_t i = 1; i <= m; ++i) indices[i - 1] = inv(i);
  return VariableTuple(std::move(indices), pi.size());
}

CiCheck check_ci(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 0);
  CiCheck result;
  if (m == 0) return result;
  for_each_ordered_tuple(f.n(), m, [&](std::span<const std::uint32_t> tuple) {
    result.witness = first_nonvanishing(f, m, tuple);
    return !result.witness.has_value();
  });
  result.holds = !result.witness.has_value();
  return result;
}

bool is_ci(const PFunction& f, std::uint32_t m) { return check_ci(f, m).holds; }

std::uint64_t count_nonvanishing_tuples(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 0);
  if (m == 0) return 0;
  std::uint64_t count = 0;
  for_each_ordered_tuple(f.n(), m, [&](std::span<const std::uint32_t> tuple) {
    if (first_nonvanishing(f, m, tuple)) ++count;
    return true;
  });
  return count;
}

std::uint32_t ci_order(const PFunction& f) {
  std::uint32_t m = 0;
  while (m < f.n() && is_ci(f, m + 1)) ++m;
  return m;
}

CiCheck check_ci_symmetric(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 1);
  if (!is_symmetric(f)) throw DomainError("symmetric shortcut requested for a non-symmetric function");
  CiCheck result;
  result.witness = first_nonvanishing(f, m, VariableTuple::identity(m, f.n()).indices());
  result.holds = !result.witness.has_value();
  return result;
}

bool is_ci_symmetric(const PFunction& f, std::uint32_t m) { return check_ci_symmetric(f, m).holds; }

std::uint32_t ci_order_symmetric(const PFunction& f) {
  if (!is_symmetric(f)) throw DomainError("symmetric shortcut requested for a non-symmetric function");
  std::uint32_t m = 0;
  while (m < f.n() && is_ci_symmetric(f, m + 1)) ++m;
  return m;
}

std::vector<CycloElement> resiliency_residue(const PFunction& f, const VariableTuple& subset) {
  const auto p = f.p();
  const auto joint = joint_counts(f, subset.indices());
  const auto assignments = detail::ipow(p, static_cast<std::uint32_t>(subset.size()));
  std::vector<CycloElement> residue;
  residue.reserve(assignments);
  for (std::uint64_t a = 0; a < assignments; ++a)
    residue.push_back(sum_of_root_powers(p, 1, std::span(joint).subspan(a * p, p)));
  return residue;
}

ResiliencyCheck check_resilient(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 0);
  ResiliencyCheck result;
  if (m == 0) {
    result.holds = is_balanced(f);
    if (!result.holds) result.witness = ResiliencyWitness{VariableTuple({}, f.n()), {}};
    return result;
  }
  for_each_subset(f.n(), m, [&](std::span<const std::uint32_t> subset) {
    const VariableTuple tuple({subset.begin(), subset.end()}, f.n());
    const auto residue = resiliency_residue(f, tuple);
    for (std::size_t a = 0; a < residue.size(); ++a) {
      if (!residue[a].is_zero()) {
        result.witness = ResiliencyWitness{tuple, digits_of(a, f.p(), m)};
        return false;
      }
    }
    return true;
  });
  result.holds = !result.witness.has_value();
  return result;
}

bool is_resilient(const PFunction& f, std::uint32_t m) { return check_resilient(f, m).holds; }

int resiliency_order(const PFunction& f) {
  if (!is_balanced(f)) return -1;
  std::uint32_t m = 0;
  while (m < f.n() && is_resilient(f, m + 1)) ++m;
  return static_cast<int>(m);
}

std::vector<std::complex<double>> exponentiated_sequence(const PFunction& f) {
  std::vector<std::complex<double>> roots(f.p());
  for (std::uint32_t t = 0; t < f.p(); ++t)
    roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / f.p());
  std::vector<std::complex<double>> seq(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) seq[k] = roots[f[k]];
  return seq;
}

std::vector<std::complex<double>> dft_float(const PFunction& f) {
  check_desk_size(f);
  return detail::prime_power_dft(exponentiated_sequence(f), f.p(), -1, kDirectDftLimit);
}

std::vector<std::complex<double>> inverse_dft(std::span<const std::complex<double>> values,
                                              std::uint32_t p) {
  if (values.size() > desk_size_limit()) throw SizeLimitError("inverse_dft: input exceeds the size limit");
  auto out = detail::prime_power_dft(values, p, +1, kDirectDftLimit);
  const double scale = 1.0 / static_cast<double>(values.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<std::complex<double>> autocorrelation(const PFunction& f) {
  check_desk_size(f);
  const std::size_t size = f.size();
  const auto p = f.p();
  if (size > kDirectDftLimit) {
    // Inverse transform of |F_f(j)|^2.
    auto spectrum = dft_float(f);
    for (auto& v : spectrum) v = std::norm(v);
    return inverse_dft(spectrum, p);
  }
  // Direct: C(t) = sum_{u} #{k : f(k+t) - f(k) = u} omega^u.
  std::vector<std::complex<double>> roots(p);
  for (std::uint32_t u = 0; u < p; ++u) roots[u] = std::polar(1.0, 2.0 * std::numbers::pi * u / p);
  std::vector<std::complex<double>> out(size);
  std::vector<std::uint64_t> hist(p);
  for (std::size_t t = 0; t < size; ++t) {
    std::fill(hist.begin(), hist.end(), 0);
    for (std::size_t k = 0; k < size; ++k) {
      const auto shifted = f[(k + t) % size];
      ++hist[(shifted + p - f[k]) % p];
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t u = 0; u < p; ++u) acc += static_cast<double>(hist[u]) * roots[u];
    out[t] = acc;
  }
  return out;
}

SpectrumDump spectrum_dump(const PFunction& f) {
  return SpectrumDump{f.p(), f.n(), dft_float(f), autocorrelation(f)};
}

}  // namespace cispectra
