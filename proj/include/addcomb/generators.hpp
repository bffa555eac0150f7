#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "addcomb/finite_set.hpp"

namespace addcomb {

/// Seeded generator with platform-independent bounded draws
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  /// k distinct indices of [0, n), sorted.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

/// {start, start+step, …} with n terms.
FiniteRealSet arithmetic_progression(std::size_t n, long start = 1, long step = 1);
/// {ratio^0, …, ratio^{n−1}}.
FiniteRealSet geometric_progression(std::size_t n, long ratio = 2);
/// n distinct integers drawn uniformly from [lo, hi].
FiniteRealSet random_integer_set(Rng& rng, std::size_t n, long lo, long hi);
/// Uniform k-subset of A.
FiniteRealSet random_subset(Rng& rng, const FiniteRealSet& a, std::size_t k);

}  // namespace addcomb
