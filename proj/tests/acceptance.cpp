/*
 * Copyright 2026 The comod Authors
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


// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Correctness comes from the library's selftest; time limits are enforced here.

#include <chrono>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  bool all = true;
  auto results = comod::run_selftest();
  for (const auto& r : results) {
    const bool ok = r.correct && r.within_time();
    all = all && ok;
    std::printf("%s %2d %-44s %.3fs / %.0fs%s%s\n", ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.limit_seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
  }

  // determinism: the CLI selftest, twice, must produce identical bytes
  const auto start = clock::now();
  std::ostringstream first, second, err;
  const int c1 = comod::cli::run({"selftest", "--format", "json"}, first, err);
  const int c2 = comod::cli::run({"selftest", "--format", "json"}, second, err);
  const double seconds = std::chrono::duration<double>(clock::now() - start).count();
  const bool same = c1 == 0 && c2 == 0 && !first.str().empty() && first.str() == second.str();
  all = all && same;
  std::printf("%s %2d %-44s %.3fs  (%zu bytes%s)\n", same ? "PASS" : "FAIL", 12, "selftest JSON is byte-identical",
              seconds, first.str().size(), same ? "" : ", outputs differ or selftest failed");
  return all ? 0 : 1;
}
