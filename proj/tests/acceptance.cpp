// Runs every acceptance criterion over the full parameter grid and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gegenball/verify.hpp"

int main(int argc, char** argv) {
  using namespace gegenball;
  VerifyOptions opts;
  for (int i = 1; i < argc; ++i) opts.only.emplace_back(argv[i]);
  const auto& names = verify::check_names();
  const auto start = std::chrono::steady_clock::now();
  int failed = 0, index = 0;
  for (const auto& name : names) {
    ++index;
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end()) continue;
    const CheckResult r = verify::run_check(name, opts);
    failed += !r.passed;
    std::printf("[%s] %2d %-24s residual=%.3e tol=%.1e time=%.1fs  %s\n", r.passed ? "PASS" : "FAIL", index,
                r.name.c_str(), r.residual, r.tolerance, r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: %d failed, total %.1fs\n", failed ? "FAILED" : "ALL PASSED", failed, total);
  return failed ? 1 : 0;
}
