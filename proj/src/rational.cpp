#include "addcomb/rational.hpp"

#include <cctype>

#include "addcomb/errors.hpp"

namespace addcomb {
namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer_text(num, true) || (slash != std::string_view::npos && !valid_integer_text(den, false)))
    throw InvalidInput("malformed rational '" + std::string(text) + "'");

  BigInt n(strip_plus(num), 10);
  BigInt d(1);
  if (slash != std::string_view::npos) d = BigInt(std::string(den), 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

BigInt ceil_sqrt(const BigInt& x) {
  if (x < 0) throw InvalidInput("ceil_sqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

namespace detail {

std::optional<Q64> small_image(const Rational& x) {
  const auto& n = x.get_num();
  const auto& d = x.get_den();
  if (!n.fits_slong_p() || !d.fits_slong_p()) return std::nullopt;
  const long nn = n.get_si();
  const long dd = d.get_si();
  if (nn > kSmallBound || nn < -kSmallBound || dd > kSmallBound) return std::nullopt;
  return Q64{nn, dd};
}

Rational to_rational(const Q64& q) {
  Rational r(BigInt(static_cast<long>(q.num)), BigInt(static_cast<long>(q.den)));
  return r;  // already canonical
}

}  // namespace detail
}  // namespace addcomb
