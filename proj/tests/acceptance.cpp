// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every bound and expected value is pinned in verification.hpp.

#include <chrono>
#include <cstdio>

#include "clanlab/verification.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  auto suite_start = clock::now();
  int failures = 0;
  int index = 0;
  auto run = [&](clanlab::CheckResult result) {
    ++index;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - suite_start);
    std::printf("%s  %d %-26s %s  [t+%lldms]\n", result.passed ? "PASS" : "FAIL", index,
                result.name.c_str(), result.detail.c_str(), static_cast<long long>(elapsed.count()));
    if (!result.passed) ++failures;
  };
  run(clanlab::criterion_counting_agreement());
  run(clanlab::criterion_big_sect_counts());
  run(clanlab::criterion_egf());
  run(clanlab::criterion_bijection_roundtrips());
  run(clanlab::criterion_worked_figures());
  run(clanlab::criterion_hasse_fixtures());
  run(clanlab::criterion_order_isomorphism());
  run(clanlab::criterion_upper_ideal());
  run(clanlab::criterion_geometry());
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
