#include "addcomb/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "addcomb/errors.hpp"

namespace addcomb {
namespace {

std::atomic<bool> g_fast_path{true};

void override_from(const char* name, std::uint64_t& slot) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const auto parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || parsed == 0)
      throw InvalidInput(std::string("bad value for ") + name + ": '" + v + "'");
    slot = parsed;
  }
}

}  // namespace

Limits& limits() {
  static Limits l;
  return l;
}

void load_limits_from_env() {
  auto& l = limits();
  override_from("ADDCOMB_MAX_PAIRS", l.max_pairs);
  override_from("ADDCOMB_MAX_TABLE", l.max_table);
  override_from("ADDCOMB_MAX_SIEVE", l.max_sieve);
}

void check_guard(std::uint64_t count, std::uint64_t limit, std::string_view what) {
  if (count > limit)
    throw ResourceLimit(std::string(what) + ": " + std::to_string(count) + " exceeds guard " +
                        std::to_string(limit));
}

void check_pairs(std::uint64_t a, std::uint64_t b, std::string_view what) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  const auto limit = limits().max_pairs;
  if (p > limit) {
    const auto shown = p > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(p);
    check_guard(shown, limit, what);
  }
}

namespace detail {
bool fast_path_enabled() { return g_fast_path.load(std::memory_order_relaxed); }
void set_fast_path_enabled(bool on) { g_fast_path.store(on, std::memory_order_relaxed); }
}  // namespace detail

}  // namespace addcomb
