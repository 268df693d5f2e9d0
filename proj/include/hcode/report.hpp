// Copyright 2026 The hcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hcode {

inline constexpr const char* kVersion = "0.1.0";

/// One quantitative comparison. Informational checks never fail a report.
struct Check {
  std::string name;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  std::optional<double> tolerance;
  bool pass = true;
  bool informational = false;
  std::string note;
};

inline Check make_check(std::string name, nlohmann::ordered_json expected, nlohmann::ordered_json observed, bool pass,
                        std::optional<double> tolerance = std::nullopt, std::string note = {}) {
  return Check{std::move(name), std::move(expected), std::move(observed), tolerance, pass, false, std::move(note)};
}

inline Check make_info(std::string name, nlohmann::ordered_json observed, std::string note = {}) {
  return Check{std::move(name), nullptr, std::move(observed), std::nullopt, true, true, std::move(note)};
}

inline nlohmann::ordered_json to_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["expected"] = c.expected;
  j["observed"] = c.observed;
  j["tolerance"] = c.tolerance ? nlohmann::ordered_json(*c.tolerance) : nlohmann::ordered_json(nullptr);
  j["pass"] = c.pass;
  if (c.informational) j["informational"] = true;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

/// Machine-readable result of one CLI command.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  double wall_time_s = 0.0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) cs.push_back(hcode::to_json(c));
    j["checks"] = cs;
    j["pass"] = pass();
    j["versions"] = {{"hcode", kVersion}, {"report_schema", 1}};
    j["wall_time_s"] = wall_time_s;
    return j;
  }
};

}  // namespace hcode
