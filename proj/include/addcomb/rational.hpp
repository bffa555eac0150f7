#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace addcomb {

using BigInt = mpz_class;
/// Exact rational. gmpxx keeps every arithmetic result canonical
/// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;

/// Parses `p` or `p/q` (optional sign, decimal digits). Non-reduced
/// fractions are accepted and canonicalized; q = 0 is rejected.
/// Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Smallest integer >= sqrt(x) for x >= 0.
BigInt ceil_sqrt(const BigInt& x);

BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

namespace detail {

/// Canonical rational with 64-bit parts. Used only as an accelerated
/// representation of set elements whose parts fit in 31 bits, so that the
/// result of one +,-,*,/ still fits (|num|, den < 2^63).
struct Q64 {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Q64&, const Q64&) = default;
  friend bool operator<(const Q64& a, const Q64& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

inline constexpr std::int64_t kSmallBound = (std::int64_t{1} << 31) - 1;

/// Q64 image of x when both parts are within kSmallBound.
std::optional<Q64> small_image(const Rational& x);
Rational to_rational(const Q64& q);
inline const Rational& to_rational(const Rational& q) { return q; }

}  // namespace detail
}  // namespace addcomb
