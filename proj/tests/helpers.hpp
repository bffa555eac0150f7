#pragma once

#include <initializer_list>

#include "addcomb/finite_set.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/limits.hpp"

namespace testing {

inline addcomb::FiniteRealSet ints(std::initializer_list<long> v) { return addcomb::FiniteRealSet::from_integers(v); }

inline addcomb::FiniteRealSet rats(std::initializer_list<const char*> v) {
  std::vector<addcomb::Rational> out;
  for (const char* s : v) out.push_back(addcomb::parse_rational(s));
  return addcomb::FiniteRealSet(out);
}

/// Random set with small rationals p/q, q in 1..3, so both kernels apply.
inline addcomb::FiniteRealSet random_rational_set(addcomb::Rng& rng, std::size_t n, long lo, long hi) {
  std::vector<addcomb::Rational> v;
  for (std::size_t i = 0; i < n; ++i) {
    addcomb::Rational x(rng.between(lo, hi), static_cast<unsigned long>(1 + rng.below(3)));
    x.canonicalize();
    v.push_back(x);
  }
  return addcomb::FiniteRealSet(v);
}

/// Runs the body with the 64-bit kernels switched off, restoring them after.
template <class Fn>
auto without_fast_path(Fn&& fn) {
  struct Restore {
    ~Restore() { addcomb::detail::set_fast_path_enabled(true); }
  } restore;
  addcomb::detail::set_fast_path_enabled(false);
  return fn();
}

}  // namespace testing
