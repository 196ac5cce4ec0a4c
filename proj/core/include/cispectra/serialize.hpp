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

// JSON encodings.
//
// SpectrumDump:  {"p": 3, "n": 2, "dft": [[re, im], ...], "autocorrelation": [[re, im], ...]}
// MethodReport:  {"m": 1, "spectral": true, ..., "orthogonal_array": true,
//                 "consensus": true, "witnesses": {"definition": "...", ...}}
// "witnesses" is present only when at least one method failed.
//
// Doubles are written with round-trip precision, so parsing a dump gives back
// bit-identical values.

#include <string>
#include <string_view>

#include "cispectra/reference.hpp"
#include "cispectra/spectral.hpp"

namespace cispectra {

std::string to_json(const SpectrumDump& dump, int indent = -1);
SpectrumDump spectrum_dump_from_json(std::string_view text);

std::string to_json(const MethodReport& report, int indent = -1);
MethodReport method_report_from_json(std::string_view text);

}  // namespace cispectra
