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

#include <cstdint>
#include <vector>

namespace cispectra::detail {

// Walks F_p^n in table order, keeping the base-p digits of the current index.
class PointOdometer {
 public:
  PointOdometer(std::uint32_t p, std::uint32_t n) : p_(p), digits_(n, 0) {}

  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
  std::uint32_t digit(std::uint32_t variable) const { return digits_[variable - 1]; }

  void advance() noexcept {
    for (auto& d : digits_) {
      if (++d < p_) return;
      d = 0;
    }
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> digits_;
};

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace cispectra::detail
