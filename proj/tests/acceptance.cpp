// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"
#include "addcomb/verify.hpp"

namespace {

struct Criterion {
  const char* suite;
  const char* label;
  double max_seconds;  // 0: no whole-suite budget (per-item budgets live in the suite)
};

constexpr Criterion kCriteria[] = {
    {"identities", "exact identity suite", 60},
    {"inequalities", "exact inequality suite", 0},
    {"norms", "triangle inequalities and zero-norm contract", 0},
    {"cube_examples", "cube characters and the character triple", 0},
    {"multinomial", "weighted multinomial identity, l <= 4, k <= 6", 10},
    {"brackets", "q/D brackets on the n in {16,32,64} corpus", 0},
    {"decomposition", "certified splits on the n in {64,128,256} corpus", 0},
    {"construction", "PG exponent scan, N = 2^6..2^10", 0},
    {"dd_ratio", "d+* dx* bound and ratio-set split", 0},
};

}  // namespace

int main(int argc, char** argv) {
  addcomb::load_limits_from_env();
  addcomb::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  const std::string only = argc > 2 ? argv[2] : "";

  int failed = 0, index = 0;
  for (const auto& c : kCriteria) {
    ++index;
    if (!only.empty() && only != c.suite) continue;
    addcomb::SuiteResult r;
    std::string error;
    try {
      r = addcomb::run_suite(c.suite, options);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool in_time = c.max_seconds == 0 || r.total_seconds < c.max_seconds;
    const bool ok = error.empty() && r.passed() && in_time;
    failed += ok ? 0 : 1;
    std::printf("[%s] %d %-15s %-50s checks=%zu failures=%zu time=%.1fs\n", ok ? "PASS" : "FAIL", index, c.suite,
                c.label, r.checks, r.failures, r.total_seconds);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_time) std::printf("    over the %.0f s budget\n", c.max_seconds);
    for (const auto& w : r.witnesses) std::printf("    counterexample: %s\n", w.c_str());
    for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  if (only.empty()) std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
