#include "addcomb/bigfloat.hpp"

#include <cstdlib>
#include <vector>

#include "addcomb/errors.hpp"

namespace addcomb {

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::down: return MPFR_RNDD;
    case Round::up: return MPFR_RNDU;
    case Round::nearest: return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

BigFloat::BigFloat(mpfr_prec_t prec) : live_(true) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& x, mpfr_prec_t prec, Round r) : live_(true) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, x.get_mpq_t(), to_mpfr(r));
}

BigFloat::BigFloat(const BigFloat& other) : live_(true) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : live_(true) {
  // Steal the limbs by swapping with a fresh minimal-precision value.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() {
  if (live_) mpfr_clear(v_);
}

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string BigFloat::to_decimal(int digits, Round r) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, to_mpfr(r));
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mant is d1 d2 ... with value 0.d1d2... × 10^exp
  std::string out;
  if (exp > 0 && exp <= static_cast<mpfr_exp_t>(mant.size())) {
    out = mant.substr(0, static_cast<std::size_t>(exp));
    std::string frac = mant.substr(static_cast<std::size_t>(exp));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (exp <= 0 && exp > -20) {
    while (!mant.empty() && mant.back() == '0') mant.pop_back();
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else {
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return sign + out;
}

BigFloat root(const Rational& x, unsigned long m, mpfr_prec_t prec, Round r) {
  return root(BigFloat(x, prec + 16, r), m, r);
}

BigFloat root(const BigFloat& x, unsigned long m, Round r) {
  if (mpfr_sgn(x.get()) < 0) throw InvalidInput("root of a negative value");
  BigFloat out(x.precision());
  mpfr_rootn_ui(out.get(), x.get(), m, to_mpfr(r));
  return out;
}

BigFloat add(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat out(std::max(a.precision(), b.precision()));
  mpfr_add(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat out(std::max(a.precision(), b.precision()));
  mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat sqrt(const BigFloat& a, Round r) {
  BigFloat out(a.precision());
  mpfr_sqrt(out.get(), a.get(), to_mpfr(r));
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::tight: return "tight";
  }
  return "?";
}

BigInt floor_root(const BigInt& x, unsigned long m) {
  if (sgn(x) < 0) throw InvalidInput("floor_root of a negative value");
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), m);
  return r;
}

bool exact_root(const Rational& q, unsigned long m, Rational* out) {
  if (sgn(q) < 0) return false;
  BigInt n, d;
  if (mpz_root(n.get_mpz_t(), q.get_num_mpz_t(), m) == 0) return false;
  if (mpz_root(d.get_mpz_t(), q.get_den_mpz_t(), m) == 0) return false;
  if (out) {
    *out = Rational(n, d);
    out->canonicalize();
  }
  return true;
}

BigFloat polylog(const BigInt& n, unsigned c, Round r, mpfr_prec_t prec) {
  if (sgn(n) <= 0) throw InvalidInput("polylog: n must be positive");
  BigFloat out(prec);
  mpfr_set_z(out.get(), n.get_mpz_t(), to_mpfr(r));
  mpfr_log2(out.get(), out.get(), to_mpfr(r));
  if (mpfr_cmp_ui(out.get(), 1) < 0) mpfr_set_ui(out.get(), 1, MPFR_RNDN);
  mpfr_pow_ui(out.get(), out.get(), c, to_mpfr(r));
  return out;
}

int compare(const Rational& q, const BigFloat& x) { return -mpfr_cmp_q(x.get(), q.get_mpq_t()); }

namespace {

constexpr mpfr_prec_t kPrecisions[] = {256, 1024, 4096};

}  // namespace

Verdict root_sum_compare(const Rational& lhs, std::span<const Rational> rhs, unsigned long m) {
  if (m == 0) throw InvalidInput("root_sum_compare: m must be >= 1");
  if (sgn(lhs) < 0) throw InvalidInput("root_sum_compare: negative lhs");
  std::vector<const Rational*> terms;
  for (const auto& y : rhs) {
    if (sgn(y) < 0) throw InvalidInput("root_sum_compare: negative rhs term");
    if (sgn(y) != 0) terms.push_back(&y);
  }
  if (sgn(lhs) == 0) return Verdict::holds;
  if (terms.empty()) return Verdict::fails;

  // Common-radical shortcut: every term = c^m · y for rational c.
  const Rational& base = *terms.front();
  Rational c_lhs;
  if (exact_root(lhs / base, m, &c_lhs)) {
    Rational sum = 0;
    bool all = true;
    for (const auto* t : terms) {
      Rational c;
      if (!exact_root(*t / base, m, &c)) {
        all = false;
        break;
      }
      sum += c;
    }
    if (all) return c_lhs <= sum ? Verdict::holds : Verdict::fails;
  }

  for (mpfr_prec_t prec : kPrecisions) {
    const BigFloat l_up = root(lhs, m, prec, Round::up);
    const BigFloat l_down = root(lhs, m, prec, Round::down);
    BigFloat r_down(prec), r_up(prec);
    for (const auto* t : terms) {
      r_down = add(r_down, root(*t, m, prec, Round::down), Round::down);
      r_up = add(r_up, root(*t, m, prec, Round::up), Round::up);
    }
    if (compare(l_up, r_down) <= 0) return Verdict::holds;
    if (compare(l_down, r_up) > 0) return Verdict::fails;
  }
  return Verdict::tight;
}

Verdict root_sum_compare_enclosed(const Rational& lhs, std::span<const BigFloat> rhs_roots_down,
                                  std::span<const BigFloat> rhs_roots_up, unsigned long m) {
  if (rhs_roots_down.size() != rhs_roots_up.size())
    throw InvalidInput("root_sum_compare_enclosed: enclosure size mismatch");
  if (sgn(lhs) < 0) throw InvalidInput("root_sum_compare_enclosed: negative lhs");
  mpfr_prec_t prec = 64;
  for (const auto& t : rhs_roots_down) prec = std::max(prec, t.precision());
  BigFloat r_down(prec), r_up(prec);
  for (std::size_t i = 0; i < rhs_roots_down.size(); ++i) {
    r_down = add(r_down, rhs_roots_down[i], Round::down);
    r_up = add(r_up, rhs_roots_up[i], Round::up);
  }
  const BigFloat l_up = root(lhs, m, prec, Round::up);
  const BigFloat l_down = root(lhs, m, prec, Round::down);
  if (compare(l_up, r_down) <= 0) return Verdict::holds;
  if (compare(l_down, r_up) > 0) return Verdict::fails;
  return Verdict::tight;
}

}  // namespace addcomb

namespace addcomb {

namespace {

BigFloat bound_value(const Rational& C, const BigInt& n, unsigned long p, unsigned long q, unsigned c, mpfr_prec_t prec,
                     Round r) {
  BigFloat b = root(Rational(pow(n, p)), q, prec, r);
  const BigFloat lg = polylog(n, c, r, prec);
  b = mul(b, lg, r);
  mpfr_mul_q(b.get(), b.get(), C.get_mpq_t(), to_mpfr(r));
  return b;
}

}  // namespace

BoundCheck check_bound(const Rational& value, const Rational& C, const BigInt& n, unsigned long p, unsigned long q,
                       unsigned c) {
  if (sgn(n) <= 0 || q == 0) throw InvalidInput("check_bound: n >= 1 and q >= 1 required");
  if (sgn(C) <= 0) throw InvalidInput("check_bound: C must be positive");
  BoundCheck out;
  for (mpfr_prec_t prec : {mpfr_prec_t(256), mpfr_prec_t(1024)}) {
    const BigFloat lo = bound_value(C, n, p, q, c, prec, Round::down);
    const BigFloat hi = bound_value(C, n, p, q, c, prec, Round::up);
    out.bound_decimal = lo.to_decimal(20, Round::down);
    BigFloat ratio(value, prec, Round::nearest);
    mpfr_div(ratio.get(), ratio.get(), lo.get(), MPFR_RNDN);
    out.ratio_decimal = ratio.to_decimal(20);
    if (compare(value, lo) <= 0) {
      out.verdict = Verdict::holds;
      return out;
    }
    if (compare(value, hi) > 0) {
      out.verdict = Verdict::fails;
      return out;
    }
  }
  out.verdict = Verdict::tight;
  return out;
}

}  // namespace addcomb
