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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cispectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition: bad modulus, out-of-range digit, mismatched level, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed truth-table or polynomial text. `position()` is a 0-based
/// character offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Table or transform larger than the configured limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace cispectra
