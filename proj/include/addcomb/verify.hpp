#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace addcomb {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First few failing cases, minimal enough to replay by hand.
  std::vector<std::string> witnesses;
  /// Deterministic measurements worth printing (slopes, sizes, bounds).
  std::vector<std::string> notes;
  /// Slowest single item in seconds; wall-clock, so kept out of reports.
  double max_item_seconds = 0;
  double total_seconds = 0;

  bool passed() const { return failures == 0 && checks > 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Random cases for the identity and inequality suites.
  std::size_t set_samples = 200;
  /// Random pairs per (group, k) in the norm suite.
  std::size_t norm_pairs = 100;
  /// Random sets for the ratio-set split.
  std::size_t ratio_samples = 20;
  /// Run each decomposition twice and compare the emitted traces.
  bool rerun_decompositions = true;
};

/// identities, inequalities, norms, cube_examples, multinomial, brackets,
/// decomposition, construction, dd_ratio, in that order.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace addcomb
