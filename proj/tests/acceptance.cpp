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

// Acceptance runner: one PASS/FAIL line per criterion, followed by the individual checks.
//
//   hcode_acceptance                 all criteria
//   hcode_acceptance --criterion 6   a single criterion (one ctest entry each)

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcode/verification.hpp"

namespace {

void print(const hcode::CriterionResult& r, bool verbose) {
  std::printf("[%s] %2d %s (%.2f s)\n", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(), r.wall_time_s);
  if (!verbose) return;
  for (const auto& c : r.checks) {
    const char* tag = c.informational ? "info" : (c.pass ? "ok" : "FAIL");
    std::printf("       %-4s %s: observed %s", tag, c.name.c_str(), c.observed.dump().c_str());
    if (!c.informational) std::printf(", expected %s", c.expected.dump().c_str());
    if (c.tolerance) std::printf(", tol %g", *c.tolerance);
    if (!c.note.empty()) std::printf(" [%s]", c.note.c_str());
    std::printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcode acceptance suite"};
  std::vector<int> ids;
  unsigned workers = 0;
  bool quiet = false;
  app.add_option("--criterion", ids, "criterion number(s) to run (default: all)")->check(CLI::Range(1, hcode::kNumCriteria));
  app.add_option("--workers", workers, "worker threads (0 = hardware concurrency)");
  app.add_flag("--quiet", quiet, "only the PASS/FAIL lines");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= hcode::kNumCriteria; ++i) ids.push_back(i);

  hcode::VerifyOptions opt;
  opt.k = 2;
  opt.workers = workers;
  int failed = 0;
  for (int id : ids) {
    try {
      const hcode::CriterionResult r = hcode::run_criterion(id, opt);
      print(r, !quiet);
      failed += r.pass() ? 0 : 1;
    } catch (const std::exception& e) {
      std::printf("[FAIL] %2d %s (error: %s)\n", id, hcode::criterion_title(id).c_str(), e.what());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed ? 1 : 0;
}
