#include "addcomb/generators.hpp"

#include <algorithm>

#include "addcomb/errors.hpp"

namespace addcomb {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidInput("Rng::below: empty range");
  // Rejection on the top multiple of n keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

long Rng::between(long lo, long hi) {
  if (hi < lo) throw InvalidInput("Rng::between: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<long>(span == 0 ? engine_() : below(span));
}

std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t k) {
  if (k > n) throw InvalidInput("Rng::sample_indices: k > n");
  // Partial Fisher-Yates.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + below(n - i)]);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

FiniteRealSet arithmetic_progression(std::size_t n, long start, long step) {
  if (step == 0 && n > 1) throw InvalidInput("arithmetic_progression: zero step");
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(Rational(start) + Rational(step) * static_cast<unsigned long>(i));
  return FiniteRealSet(std::move(v));
}

FiniteRealSet geometric_progression(std::size_t n, long ratio) {
  if (ratio == 0 || ratio == 1 || ratio == -1) throw InvalidInput("geometric_progression: ratio must satisfy |r| >= 2");
  std::vector<Rational> v;
  v.reserve(n);
  BigInt x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace_back(x);
    x *= ratio;
  }
  return FiniteRealSet(std::move(v));
}

FiniteRealSet random_integer_set(Rng& rng, std::size_t n, long lo, long hi) {
  if (hi < lo || static_cast<std::uint64_t>(hi - lo) + 1 < n)
    throw InvalidInput("random_integer_set: range too small");
  std::vector<long> picked;
  picked.reserve(n);
  // Rejection sampling; ranges here are much larger than n or small enough.
  std::vector<long> pool;
  if (static_cast<std::uint64_t>(hi - lo) + 1 <= 4 * n + 64) {
    for (long x = lo; x <= hi; ++x) pool.push_back(x);
    for (auto i : rng.sample_indices(pool.size(), n)) picked.push_back(pool[i]);
  } else {
    while (picked.size() < n) {
      const long x = rng.between(lo, hi);
      if (std::find(picked.begin(), picked.end(), x) == picked.end()) picked.push_back(x);
    }
  }
  return FiniteRealSet::from_integers(std::span<const long>(picked));
}

FiniteRealSet random_subset(Rng& rng, const FiniteRealSet& a, std::size_t k) {
  std::vector<Rational> v;
  v.reserve(k);
  for (auto i : rng.sample_indices(a.size(), k)) v.push_back(a[i]);
  return make_sorted_set(std::move(v));
}

}  // namespace addcomb
