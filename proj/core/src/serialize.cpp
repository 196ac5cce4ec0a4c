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

#include "cispectra/serialize.hpp"

#include <json.hpp>

#include "cispectra/error.hpp"

namespace cispectra {

namespace {

using nlohmann::json;

json complex_array(const std::vector<std::complex<double>>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

std::vector<std::complex<double>> complex_vector(const json& array, const char* field) {
  if (!array.is_array()) throw ParseError(std::string("\"") + field + "\" must be an array", 0);
  std::vector<std::complex<double>> out;
  out.reserve(array.size());
  for (const auto& pair : array) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ParseError(std::string("\"") + field + "\" entries must be [re, im] pairs", 0);
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

json parse_object(std::string_view text) {
  try {
    auto j = json::parse(text.begin(), text.end());
    if (!j.is_object()) throw ParseError("expected a JSON object", 0);
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

template <typename T>
T required(const json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"", 0);
  try {
    return j.at(field).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field \"") + field + "\" has the wrong type", 0);
  }
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"", 0);
  return j.at(name);
}

}  // namespace

std::string to_json(const SpectrumDump& dump, int indent) {
  json j;
  j["p"] = dump.p;
  j["n"] = dump.n;
  j["dft"] = complex_array(dump.dft);
  j["autocorrelation"] = complex_array(dump.autocorrelation);
  return j.dump(indent);
}

SpectrumDump spectrum_dump_from_json(std::string_view text) {
  const auto j = parse_object(text);
  SpectrumDump dump;
  dump.p = required<std::uint32_t>(j, "p");
  dump.n = required<std::uint32_t>(j, "n");
  dump.dft = complex_vector(field(j, "dft"), "dft");
  dump.autocorrelation = complex_vector(field(j, "autocorrelation"), "autocorrelation");
  if (dump.dft.size() != dump.autocorrelation.size())
    throw ParseError("dft and autocorrelation lengths differ", 0);
  return dump;
}

std::string to_json(const MethodReport& report, int indent) {
  json j;
  j["m"] = report.m;
  json witnesses = json::object();
  for (auto method : kAllMethods) {
    const std::string name(method_name(method));
    j[name] = report.verdict(method);
    if (report.witness(method)) witnesses[name] = *report.witness(method);
  }
  j["consensus"] = report.consensus;
  if (!witnesses.empty()) j["witnesses"] = std::move(witnesses);
  return j.dump(indent);
}

MethodReport method_report_from_json(std::string_view text) {
  const auto j = parse_object(text);
  MethodReport report;
  report.m = required<std::uint32_t>(j, "m");
  for (auto method : kAllMethods) {
    const std::string name(method_name(method));
    const auto i = static_cast<std::size_t>(method);
    report.verdicts[i] = required<bool>(j, name.c_str());
    if (j.contains("witnesses") && j["witnesses"].is_object() && j["witnesses"].contains(name)) {
      const auto& witness = j["witnesses"][name];
      if (!witness.is_string()) throw ParseError("witness for \"" + name + "\" must be a string", 0);
      report.witnesses[i] = witness.get<std::string>();
    }
  }
  report.consensus = required<bool>(j, "consensus");
  return report;
}

}  // namespace cispectra
