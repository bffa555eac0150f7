#pragma once

#include <cstdint>
#include <string_view>

namespace addcomb {

/// Process-wide size guards. Defaults can be overridden from the
/// environment (ADDCOMB_MAX_PAIRS, ADDCOMB_MAX_TABLE, ADDCOMB_MAX_SIEVE).
struct Limits {
  /// Cap on |A||B|-sized intermediate enumerations.
  std::uint64_t max_pairs = 100'000'000;
  /// Cap on sparse generalized-convolution tables and group enumerations.
  std::uint64_t max_table = 20'000'000;
  /// Cap on the prime sieve bound.
  std::uint64_t max_sieve = 200'000'000;
};

Limits& limits();
void load_limits_from_env();

/// Throws ResourceLimit when `count` exceeds `limit`.
void check_guard(std::uint64_t count, std::uint64_t limit, std::string_view what);
/// Same, for a product a*b computed without overflow.
void check_pairs(std::uint64_t a, std::uint64_t b, std::string_view what);

namespace detail {
/// Switch for the accelerated 64-bit kernels (tests compare both routes).
bool fast_path_enabled();
void set_fast_path_enabled(bool on);
}  // namespace detail

}  // namespace addcomb
