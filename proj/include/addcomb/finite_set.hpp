#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

enum class SetOp { sum, diff, prod, quot };
enum class Kind { additive, multiplicative };
const char* to_string(Kind k);
/// "add"/"additive" or "mult"/"multiplicative".
Kind parse_kind(const std::string& name);
enum class SliceKind { additive, multiplicative, reflected, ratio };
enum class Sign { plus, minus };

/// Sorted, duplicate-free finite set of exact rationals.
///
/// Immutable after construction. When every element has numerator and
/// denominator below 2^31 a 64-bit image is cached alongside, which the
/// counting kernels use instead of GMP arithmetic.
class FiniteRealSet {
 public:
  FiniteRealSet() = default;
  explicit FiniteRealSet(std::vector<Rational> elems);
  FiniteRealSet(std::initializer_list<Rational> elems);

  /// Builds from integers; convenient for generators and tests.
  static FiniteRealSet from_integers(std::span<const long> values);
  static FiniteRealSet from_integers(std::initializer_list<long> values);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  std::span<const Rational> elements() const noexcept { return elems_; }
  const Rational& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(const Rational& x) const;
  bool contains_zero() const { return contains(Rational(0)); }
  /// Index of x, or nullopt.
  std::optional<std::size_t> index_of(const Rational& x) const;

  /// The 64-bit image, present when every element fits.
  const std::vector<detail::Q64>* small() const noexcept { return small_ ? &*small_ : nullptr; }

  friend bool operator==(const FiniteRealSet& a, const FiniteRealSet& b) { return a.elems_ == b.elems_; }

 private:
  struct sorted_tag {};
  FiniteRealSet(sorted_tag, std::vector<Rational> sorted_unique);
  void build_image();

  std::vector<Rational> elems_;
  std::optional<std::vector<detail::Q64>> small_;

  friend FiniteRealSet make_sorted_set(std::vector<Rational> sorted_unique);
};

/// Trusted constructor for input already sorted and duplicate-free.
FiniteRealSet make_sorted_set(std::vector<Rational> sorted_unique);

// Elementary set algebra.
FiniteRealSet set_union(const FiniteRealSet& a, const FiniteRealSet& b);
FiniteRealSet set_intersection(const FiniteRealSet& a, const FiniteRealSet& b);
FiniteRealSet set_difference(const FiniteRealSet& a, const FiniteRealSet& b);
bool is_subset(const FiniteRealSet& a, const FiniteRealSet& b);
FiniteRealSet translate(const FiniteRealSet& a, const Rational& x);   // A + x
FiniteRealSet dilate(const FiniteRealSet& a, const Rational& x);      // xA
FiniteRealSet reflect(const FiniteRealSet& a, const Rational& x);     // x - A
FiniteRealSet divide_into(const FiniteRealSet& a, const Rational& x); // x / A, zeros skipped
FiniteRealSet without_zero(const FiniteRealSet& a);

/// {a o b : a in A, b in B}; for quot, zero elements of B are skipped.
FiniteRealSet combine(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op);

/// additive: A∩(A−x); multiplicative: A∩xA; reflected: A∩(x−A);
/// ratio: A∩(x/A) with zero elements of A skipped.
FiniteRealSet slice(const FiniteRealSet& a, const Rational& x, SliceKind kind);

/// |A² ± Δ(A)| (additive) or |A²·Δ(A)|, |A²/Δ(A)| (multiplicative),
/// evaluated through the fiber sum over A−A (resp. A/A).
/// The multiplicative variant requires 0 ∉ A.
BigInt higher_sumset_size(const FiniteRealSet& a, Sign sign, Kind kind);

/// R[A] = {(a1−a)/(a2−a) : a2 ≠ a}. Requires |A| >= 2.
FiniteRealSet ratio_set(const FiniteRealSet& a);

}  // namespace addcomb
