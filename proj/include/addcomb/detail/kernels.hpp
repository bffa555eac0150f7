#pragma once

// Element-type-generic counting kernels. Every kernel is instantiated for
// detail::Q64 (64-bit image of small sets) and for Rational (general GMP
// route); callers go through with_elements() which picks the route.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <type_traits>
#include <vector>

#include "addcomb/finite_set.hpp"
#include "addcomb/limits.hpp"
#include "addcomb/rational.hpp"

namespace addcomb::detail {

inline Q64 make_q(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

inline bool is_zero(const Q64& q) { return q.num == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline int sign_of(const Q64& q) { return (q.num > 0) - (q.num < 0); }
inline int sign_of(const Rational& q) { return sgn(q); }

/// a o b; for quot the caller guarantees b != 0.
inline Q64 apply(SetOp op, const Q64& a, const Q64& b) {
  const bool ints = a.den == 1 && b.den == 1;
  switch (op) {
    case SetOp::sum:
      return ints ? Q64{a.num + b.num, 1} : make_q(a.num * b.den + b.num * a.den, a.den * b.den);
    case SetOp::diff:
      return ints ? Q64{a.num - b.num, 1} : make_q(a.num * b.den - b.num * a.den, a.den * b.den);
    case SetOp::prod:
      return ints ? Q64{a.num * b.num, 1} : make_q(a.num * b.num, a.den * b.den);
    case SetOp::quot:
      return make_q(a.num * b.den, a.den * b.num);
  }
  return {};
}

inline Rational apply(SetOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case SetOp::sum: return a + b;
    case SetOp::diff: return a - b;
    case SetOp::prod: return a * b;
    case SetOp::quot: return a / b;
  }
  return {};
}

/// Calls fn with one span per set, all of the same element type: Q64 when
/// every set has a 64-bit image (and the fast path is on), else Rational.
template <class Fn>
decltype(auto) with_elements(std::span<const FiniteRealSet* const> sets, Fn&& fn) {
  bool small = fast_path_enabled();
  for (const auto* s : sets) small = small && s->small() != nullptr;
  if (small) {
    std::vector<std::span<const Q64>> spans;
    for (const auto* s : sets) spans.emplace_back(*s->small());
    return fn(spans);
  }
  std::vector<std::span<const Rational>> spans;
  for (const auto* s : sets) spans.emplace_back(s->elements());
  return fn(spans);
}

template <class Fn>
decltype(auto) with_elements(std::initializer_list<const FiniteRealSet*> sets, Fn&& fn) {
  return with_elements(std::span<const FiniteRealSet* const>(sets.begin(), sets.size()), std::forward<Fn>(fn));
}

template <class T>
using Counts = std::vector<std::pair<T, std::uint64_t>>;

/// Sorts and run-length encodes.
template <class T>
Counts<T> aggregate(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  Counts<T> out;
  for (auto& v : values) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(std::move(v), 1);
  }
  return out;
}

/// Every a o b over A x B (quot skips b = 0).
template <class T>
std::vector<T> op_values(std::span<const T> a, std::span<const T> b, SetOp op) {
  check_pairs(a.size(), b.size(), "pairwise enumeration");
  std::vector<T> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      if (op == SetOp::quot && is_zero(y)) continue;
      out.push_back(apply(op, x, y));
    }
  return out;
}

template <class T>
Counts<T> rep_counts(std::span<const T> a, std::span<const T> b, SetOp op) {
  return aggregate(op_values(a, b, op));
}

/// Multiplicities of the values a o b, in decreasing order; the values
/// themselves are not kept. Canonical Q64 pairs group under any total order,
/// so the cheaper lexicographic one is used.
template <class T>
std::vector<std::uint64_t> multiplicity_profile(std::span<const T> a, std::span<const T> b, SetOp op) {
  std::vector<T> values = op_values(a, b, op);
  if constexpr (std::is_same_v<T, Q64>)
    std::sort(values.begin(), values.end(),
              [](const Q64& l, const Q64& r) { return l.num != r.num ? l.num < r.num : l.den < r.den; });
  else
    std::sort(values.begin(), values.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == values[i]) ++j;
    out.push_back(j - i);
    i = j;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Σ over common keys of Π counts, for count tables sorted by key.
template <class T>
BigInt product_sum(const std::vector<const Counts<T>*>& tables) {
  BigInt total = 0;
  if (tables.empty()) return total;
  std::vector<std::size_t> pos(tables.size(), 0);
  const auto& first = *tables[0];
  for (const auto& [key, c0] : first) {
    BigInt term = c0;
    bool present = true;
    for (std::size_t t = 1; t < tables.size() && present; ++t) {
      const auto& tab = *tables[t];
      auto& p = pos[t];
      while (p < tab.size() && tab[p].first < key) ++p;
      if (p < tab.size() && tab[p].first == key)
        term *= tab[p].second;
      else
        present = false;
    }
    if (present) total += term;
  }
  return total;
}

/// Σ_x r(x)^k.
template <class T>
BigInt power_sum(const Counts<T>& counts, unsigned k) {
  BigInt total = 0;
  BigInt term;
  for (const auto& entry : counts) {
    mpz_ui_pow_ui(term.get_mpz_t(), entry.second, k);
    total += term;
  }
  return total;
}

}  // namespace addcomb::detail
