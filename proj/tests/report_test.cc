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

#include "hcode/report.hpp"

#include <gtest/gtest.h>

using namespace hcode;

TEST(report, schema_fields) {
  Report r;
  r.command = "distance";
  r.inputs["torus"] = {9, 9};
  r.results["min_distance"] = 36;
  r.checks.push_back(make_check("min_distance", 36, 36, true));
  r.checks.push_back(make_info("sampled", 40, "upper bound"));
  const auto j = r.to_json();
  EXPECT_EQ(j["command"], "distance");
  EXPECT_EQ(j["results"]["min_distance"], 36);
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_TRUE(j["checks"][0]["tolerance"].is_null());
  EXPECT_FALSE(j["checks"][0].contains("informational"));
  EXPECT_TRUE(j["checks"][1]["informational"].get<bool>());
  EXPECT_EQ(j["checks"][1]["note"], "upper bound");
  EXPECT_EQ(j["versions"]["hcode"], kVersion);
  EXPECT_EQ(j["versions"]["report_schema"], 1);
  EXPECT_TRUE(j["pass"].get<bool>());
  // Key order is part of the format.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "results", "checks", "pass", "versions", "wall_time_s"}));
}

TEST(report, failing_check_fails_report) {
  Report r;
  r.checks.push_back(make_check("gap", 6.0, 5.0, false, 1e-9));
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.to_json()["pass"].get<bool>());
  EXPECT_DOUBLE_EQ(r.to_json()["checks"][0]["tolerance"].get<double>(), 1e-9);
  Report empty;
  EXPECT_TRUE(empty.pass());
}

TEST(report, deterministic_apart_from_wall_time) {
  auto build = [](double t) {
    Report r;
    r.command = "entropy";
    r.results["entropy"] = 2;
    r.checks.push_back(make_check("entropy", 2, 2, true));
    r.wall_time_s = t;
    auto j = r.to_json();
    j.erase("wall_time_s");
    return j.dump(2);
  };
  EXPECT_EQ(build(0.1), build(7.0));
}
