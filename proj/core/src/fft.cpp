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

#include "fft.hpp"

#include <cmath>
#include <numbers>

#include "cispectra/error.hpp"

namespace cispectra::detail {

namespace {

using Complex = std::complex<double>;

std::vector<Complex> twiddles(std::size_t size, int sign) {
  std::vector<Complex> tw(size);
  for (std::size_t r = 0; r < size; ++r)
    tw[r] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(r) /
                                static_cast<double>(size));
  return tw;
}

void radix_p(const Complex* in, std::size_t in_stride, std::size_t size, Complex* out,
             std::uint32_t p, const std::vector<Complex>& tw, std::size_t tw_step) {
  if (size == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t sub = size / p;
  std::vector<Complex> parts(size);
  for (std::uint32_t r = 0; r < p; ++r)
    radix_p(in + r * in_stride, in_stride * p, sub, parts.data() + r * sub, p, tw, tw_step * p);
  const std::size_t n_total = tw.size();
  for (std::size_t j = 0; j < size; ++j) {
    Complex acc = parts[j % sub];
    for (std::uint32_t r = 1; r < p; ++r)
      acc += tw[(r * j * tw_step) % n_total] * parts[r * sub + j % sub];
    out[j] = acc;
  }
}

}  // namespace

std::vector<Complex> prime_power_dft(std::span<const Complex> x, std::uint32_t p, int sign,
                                     std::size_t direct_limit) {
  const std::size_t size = x.size();
  if (size == 0) return {};
  {
    std::size_t s = size;
    while (s % p == 0) s /= p;
    if (s != 1) throw DomainError("transform length is not a power of p");
  }
  const auto tw = twiddles(size, sign);
  std::vector<Complex> out(size);
  if (size <= direct_limit) {
    for (std::size_t j = 0; j < size; ++j) {
      double re = 0.0, im = 0.0;
      std::size_t idx = 0;  // k*j mod N, kept incrementally
      for (std::size_t k = 0; k < size; ++k) {
        re += x[k].real() * tw[idx].real() - x[k].imag() * tw[idx].imag();
        im += x[k].real() * tw[idx].imag() + x[k].imag() * tw[idx].real();
        idx += j;
        if (idx >= size) idx -= size;
      }
      out[j] = Complex(re, im);
    }
    return out;
  }
  radix_p(x.data(), 1, size, out.data(), p, tw, 1);
  return out;
}

}  // namespace cispectra::detail
