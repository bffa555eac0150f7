#pragma once

#include <mpfr.h>

#include <span>
#include <string>

#include "addcomb/rational.hpp"

namespace addcomb {

enum class Round { down, up, nearest };

/// Owning MPFR value. Every operation takes an explicit rounding direction
/// so enclosures stay rigorous.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256);
  BigFloat(const Rational& x, mpfr_prec_t prec, Round r);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  /// Exact rational value of this binary float.
  Rational to_rational() const;
  /// Decimal with `digits` significant digits, rounded in direction r.
  std::string to_decimal(int digits, Round r = Round::nearest) const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

 private:
  mpfr_t v_;
  bool live_ = false;
};

mpfr_rnd_t to_mpfr(Round r);

/// x^(1/m) for x >= 0, rounded in direction r.
BigFloat root(const Rational& x, unsigned long m, mpfr_prec_t prec, Round r);
BigFloat root(const BigFloat& x, unsigned long m, Round r);
BigFloat add(const BigFloat& a, const BigFloat& b, Round r);
BigFloat mul(const BigFloat& a, const BigFloat& b, Round r);
BigFloat sqrt(const BigFloat& a, Round r);

enum class Verdict { holds, fails, tight };
const char* to_string(Verdict v);

/// Decides lhs^(1/m) <= Σ rhs_i^(1/m) for nonnegative rationals.
///
/// Exact whenever every nonzero term is a rational m-th power multiple of
/// one common radical (covers zero terms, equal terms, scaled copies);
/// otherwise directed rounding at 256, 1024 and 4096 bits. Returns tight
/// only if the two sides agree to within the last enclosure width.
Verdict root_sum_compare(const Rational& lhs, std::span<const Rational> rhs, unsigned long m);

/// The same with each rhs_i^(1/m) supplied as a rounded-down enclosure
/// (used when the rhs terms are irrational, e.g. moduli of complex values).
Verdict root_sum_compare_enclosed(const Rational& lhs, std::span<const BigFloat> rhs_roots_down,
                                  std::span<const BigFloat> rhs_roots_up, unsigned long m);

/// max(1, log₂ n)^c rounded in direction r.
BigFloat polylog(const BigInt& n, unsigned c, Round r, mpfr_prec_t prec = 256);

/// Rational q compared with a BigFloat: sign of (q − x).
int compare(const Rational& q, const BigFloat& x);

/// Largest s with s^m <= x (x >= 0): exact integer m-th root, floor.
BigInt floor_root(const BigInt& x, unsigned long m);

/// Nonnegative rational q is a perfect m-th power r^m; returns r.
bool exact_root(const Rational& q, unsigned long m, Rational* out);

}  // namespace addcomb

namespace addcomb {

struct BoundCheck {
  Verdict verdict = Verdict::tight;
  /// The bound and value/bound, 20 significant digits.
  std::string bound_decimal;
  std::string ratio_decimal;
};

/// Decides value <= C·n^{p/q}·max(1, log₂ n)^c with directed rounding
/// (256 bits, then 1024). n >= 1, q >= 1.
BoundCheck check_bound(const Rational& value, const Rational& C, const BigInt& n, unsigned long p, unsigned long q,
                       unsigned c);

}  // namespace addcomb
