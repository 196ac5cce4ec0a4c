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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace cispectra::detail {

/// X[j] = sum_k x[k] exp(sign * 2 pi i k j / N), N = x.size() a power of p.
/// Direct summation up to `direct_limit`, radix-p decimation in time above.
std::vector<std::complex<double>> prime_power_dft(std::span<const std::complex<double>> x,
                                                  std::uint32_t p, int sign,
                                                  std::size_t direct_limit);

}  // namespace cispectra::detail
