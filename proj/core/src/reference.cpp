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

#include "cispectra/reference.hpp"

#include <algorithm>
#include <string>

#include "cispectra/error.hpp"
#include "cispectra/spectral.hpp"
#include "points.hpp"

namespace cispectra {

namespace {

void require_order(const PFunction& f, std::uint32_t m, std::uint32_t lowest) {
  if (m < lowest || m > f.n())
    throw DomainError("order m = " + std::to_string(m) + " outside [" + std::to_string(lowest) +
                      ", " + std::to_string(f.n()) + "]");
}

void require_vector(const PFunction& f, std::span<const std::uint32_t> c) {
  if (c.size() != f.n())
    throw DomainError("vector c has length " + std::to_string(c.size()) + ", expected n = " +
                      std::to_string(f.n()));
  for (auto ci : c)
    if (ci >= f.p()) throw DomainError("vector c has an entry outside F_p");
}

std::string format_vector(std::span<const std::uint32_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::uint32_t dot(std::span<const std::uint32_t> c, std::span<const std::uint32_t> x, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<std::uint64_t>(c[i]) * x[i];
  return static_cast<std::uint32_t>(s % p);
}

std::uint32_t weight(std::span<const std::uint32_t> c) {
  return static_cast<std::uint32_t>(std::count_if(c.begin(), c.end(), [](auto v) { return v != 0; }));
}

// Visits every c in F_p^n with 1 <= wt(c) <= m, in table order.
template <typename Visit>
void for_each_low_weight_vector(std::uint32_t p, std::uint32_t n, std::uint32_t m, Visit&& visit) {
  detail::PointOdometer c(p, n);
  const auto size = table_size(p, n);
  for (std::uint64_t k = 1; k < size; ++k) {
    c.advance();
    const auto w = weight(c.digits());
    if (w >= 1 && w <= m && !visit(std::span<const std::uint32_t>(c.digits()))) return;
  }
}

// Restriction counts: counts[a * p + t] = #{x : x_S = a, f(x) = t}, with
// a = sum_i x_{S[i]} p^(i-1).
std::vector<std::uint64_t> restriction_counts(const PFunction& f, std::span<const std::uint32_t> subset) {
  const auto p = f.p();
  std::vector<std::uint64_t> counts(detail::ipow(p, static_cast<std::uint32_t>(subset.size())) * p, 0);
  detail::PointOdometer x(p, f.n());
  for (std::size_t k = 0; k < f.size(); ++k, x.advance()) {
    std::uint64_t a = 0;
    for (std::size_t i = subset.size(); i-- > 0;) a = a * p + x.digit(subset[i]);
    ++counts[a * p + f[k]];
  }
  return counts;
}

}  // namespace

OracleCheck check_ci_definition(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 0);
  OracleCheck result;
  if (m == 0) return result;
  const auto p = f.p();
  const auto totals = f.value_counts();
  const auto scale = detail::ipow(p, m);
  for_each_subset(f.n(), m, [&](std::span<const std::uint32_t> subset) {
    const auto counts = restriction_counts(f, subset);
    for (std::uint64_t a = 0; a < scale; ++a) {
      for (std::uint32_t t = 0; t < p; ++t) {
        if (scale * counts[a * p + t] != totals[t]) {
          result.witness = "subset " + format_vector(subset) + " assignment " +
                           format_vector(digits_of(a, p, m)) + " value " + std::to_string(t);
          return false;
        }
      }
    }
    return true;
  });
  result.holds = !result.witness;
  return result;
}

bool ci_oracle_definition(const PFunction& f, std::uint32_t m) { return check_ci_definition(f, m).holds; }

CycloElement chrestenson_cyclic(const PFunction& f, std::span<const std::uint32_t> c) {
  require_vector(f, c);
  const auto p = f.p();
  std::vector<std::int64_t> counts(p, 0);
  detail::PointOdometer x(p, f.n());
  for (std::size_t k = 0; k < f.size(); ++k, x.advance())
    ++counts[(f[k] + p - dot(c, x.digits(), p)) % p];
  return sum_of_root_powers(p, 1, counts);
}

OracleCheck check_ci_chrestenson_cyclic(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 1);
  OracleCheck result;
  for_each_low_weight_vector(f.p(), f.n(), m, [&](std::span<const std::uint32_t> c) {
    if (chrestenson_cyclic(f, c).is_zero()) return true;
    result.witness = "c " + format_vector(c);
    return false;
  });
  result.holds = !result.witness;
  return result;
}

bool ci_oracle_chrestenson_cyclic(const PFunction& f, std::uint32_t m) {
  return check_ci_chrestenson_cyclic(f, m).holds;
}

CycloElement chrestenson_linear(const PFunction& f, std::span<const std::uint32_t> c) {
  require_vector(f, c);
  const auto p = f.p();
  std::vector<std::int64_t> counts(p, 0);
  detail::PointOdometer x(p, f.n());
  for (std::size_t k = 0; k < f.size(); ++k, x.advance()) counts[dot(c, x.digits(), p)] += f[k];
  return sum_of_root_powers(p, 1, counts);
}

OracleCheck check_ci_chrestenson_linear(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 1);
  OracleCheck result;
  const auto p = f.p();
  for (std::uint32_t shift = 0; shift < p && !result.witness; ++shift) {
    std::vector<std::uint32_t> table(f.table().begin(), f.table().end());
    for (auto& v : table) v = (v + shift) % p;
    const PFunction shifted(p, f.n(), std::move(table));
    for_each_low_weight_vector(p, f.n(), m, [&](std::span<const std::uint32_t> c) {
      if (chrestenson_linear(shifted, c).is_zero()) return true;
      result.witness = "shift " + std::to_string(shift) + " c " + format_vector(c);
      return false;
    });
  }
  result.holds = !result.witness;
  return result;
}

bool ci_oracle_chrestenson_linear(const PFunction& f, std::uint32_t m) {
  return check_ci_chrestenson_linear(f, m).holds;
}

bool CountMatrix::rows_identical() const {
  for (std::uint32_t i = 1; i < p; ++i)
    if (!std::equal(entries.begin() + i * p, entries.begin() + (i + 1) * p, entries.begin()))
      return false;
  return true;
}

std::string CountMatrix::to_string() const {
  std::string out = "c " + format_vector(c) + " rows";
  for (std::uint32_t i = 0; i < p; ++i) {
    out += " (";
    for (std::uint32_t j = 0; j < p; ++j) {
      if (j != 0) out += ",";
      out += std::to_string((*this)(i, j));
    }
    out += ")";
  }
  return out;
}

CountMatrix count_matrix(const PFunction& f, std::span<const std::uint32_t> c) {
  require_vector(f, c);
  const auto p = f.p();
  CountMatrix matrix{p, Digits(c.begin(), c.end()), std::vector<std::uint64_t>(p * p, 0)};
  detail::PointOdometer x(p, f.n());
  for (std::size_t k = 0; k < f.size(); ++k, x.advance()) ++matrix.entries[dot(c, x.digits(), p) * p + f[k]];
  return matrix;
}

MatrixCheck matrix_test(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 1);
  MatrixCheck result;
  for_each_low_weight_vector(f.p(), f.n(), m, [&](std::span<const std::uint32_t> c) {
    auto matrix = count_matrix(f, c);
    if (matrix.rows_identical()) return true;
    result.witness = std::move(matrix);
    return false;
  });
  result.holds = !result.witness;
  return result;
}

OracleCheck check_orthogonal_array(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 1);
  OracleCheck result;
  const auto p = f.p();
  const auto patterns = detail::ipow(p, m);
  const auto sizes = f.value_counts();
  for (std::uint32_t value = 0; value < p && !result.witness; ++value) {
    const auto b = sizes[value];
    if (b % patterns != 0) {
      result.witness = "value " + std::to_string(value) + " preimage size " + std::to_string(b) +
                       " not divisible by p^m";
      break;
    }
    // Rows of the array B_value.
    std::vector<Digits> rows;
    rows.reserve(b);
    detail::PointOdometer x(p, f.n());
    for (std::size_t k = 0; k < f.size(); ++k, x.advance())
      if (f[k] == value) rows.push_back(x.digits());

    for_each_subset(f.n(), m, [&](std::span<const std::uint32_t> columns) {
      std::vector<std::uint64_t> seen(patterns, 0);
      for (const auto& row : rows) {
        std::uint64_t pattern = 0;
        for (std::size_t i = columns.size(); i-- > 0;) pattern = pattern * p + row[columns[i] - 1];
        ++seen[pattern];
      }
      for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
        if (seen[pattern] != b / patterns) {
          result.witness = "value " + std::to_string(value) + " columns " + format_vector(columns) +
                           " pattern " + format_vector(digits_of(pattern, p, m));
          return false;
        }
      }
      return true;
    });
  }
  result.holds = !result.witness;
  return result;
}

bool orthogonal_array_test(const PFunction& f, std::uint32_t m) { return check_orthogonal_array(f, m).holds; }

OracleCheck check_resilient_counting(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 0);
  OracleCheck result;
  const auto p = f.p();
  const auto free_points = detail::ipow(p, f.n() - m);
  if (free_points % p != 0) {
    // A single remaining point can never take all p values equally often.
    result.holds = false;
    result.witness = "fixing all n variables leaves one point";
    return result;
  }
  const auto per_value = free_points / p;
  for_each_subset(f.n(), m, [&](std::span<const std::uint32_t> subset) {
    const auto counts = restriction_counts(f, subset);
    for (std::uint64_t a = 0; a < counts.size() / p; ++a) {
      for (std::uint32_t t = 0; t < p; ++t) {
        if (counts[a * p + t] != per_value) {
          result.witness = "subset " + format_vector(subset) + " assignment " +
                           format_vector(digits_of(a, p, m));
          return false;
        }
      }
    }
    return true;
  });
  result.holds = !result.witness;
  return result;
}

bool resilient_oracle_counting(const PFunction& f, std::uint32_t m) {
  return check_resilient_counting(f, m).holds;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::spectral: return "spectral";
    case Method::definition: return "definition";
    case Method::chrestenson_cyclic: return "chrestenson_cyclic";
    case Method::chrestenson_linear: return "chrestenson_linear";
    case Method::matrix: return "matrix";
    case Method::orthogonal_array: return "orthogonal_array";
  }
  return "unknown";
}

MethodReport consensus(const PFunction& f, std::uint32_t m) {
  require_order(f, m, 1);
  MethodReport report;
  report.m = m;
  auto record = [&report](Method method, bool holds, std::optional<std::string> witness) {
    const auto i = static_cast<std::size_t>(method);
    report.verdicts[i] = holds;
    report.witnesses[i] = std::move(witness);
  };

  const auto spectral = check_ci(f, m);
  std::optional<std::string> spectral_witness;
  if (spectral.witness)
    spectral_witness = "tuple " + spectral.witness->tuple.to_string() + " conjugate " +
                       std::to_string(spectral.witness->conjugate) + " value " +
                       spectral.witness->value.to_string();
  record(Method::spectral, spectral.holds, std::move(spectral_witness));

  auto definition = check_ci_definition(f, m);
  record(Method::definition, definition.holds, std::move(definition.witness));
  auto cyclic = check_ci_chrestenson_cyclic(f, m);
  record(Method::chrestenson_cyclic, cyclic.holds, std::move(cyclic.witness));
  auto linear = check_ci_chrestenson_linear(f, m);
  record(Method::chrestenson_linear, linear.holds, std::move(linear.witness));
  auto matrix = matrix_test(f, m);
  record(Method::matrix, matrix.holds,
         matrix.witness ? std::optional<std::string>(matrix.witness->to_string()) : std::nullopt);
  auto oa = check_orthogonal_array(f, m);
  record(Method::orthogonal_array, oa.holds, std::move(oa.witness));

  report.consensus = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                 [&](bool v) { return v == report.verdicts.front(); });
  return report;
}

}  // namespace cispectra
