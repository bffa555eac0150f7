#include "addcomb/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/limits.hpp"

namespace addcomb {

std::vector<std::uint64_t> first_odd_primes(std::size_t t) {
  std::vector<std::uint64_t> out;
  if (t == 0) return out;
  // p_{t+1} < m(ln m + ln ln m) for m = t+1 >= 6
  const double m = static_cast<double>(t + 1);
  std::uint64_t bound = m < 6 ? 16 : static_cast<std::uint64_t>(m * (std::log(m) + std::log(std::log(m)))) + 16;
  for (;;) {
    check_guard(bound, limits().max_sieve, "prime sieve bound");
    std::vector<bool> composite(bound + 1, false);
    out.clear();
    for (std::uint64_t p = 2; p <= bound && out.size() < t; ++p) {
      if (composite[p]) continue;
      if (p != 2) out.push_back(p);
      for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
    }
    if (out.size() == t) return out;
    bound *= 2;
  }
}

std::vector<FiniteRealSet> PGConstruction::fibers(const FiniteRealSet& b) const {
  std::vector<FiniteRealSet> out;
  for (std::size_t j = 1; j <= K; ++j) {
    std::vector<Rational> row;
    const BigInt g = BigInt(1) << static_cast<mp_bitcnt_t>(j);
    for (const auto& x : b) {
      // x = p·2^j with p odd
      const BigInt& num = x.get_num();
      if (mpz_divisible_p(num.get_mpz_t(), g.get_mpz_t()) && !mpz_divisible_2exp_p(num.get_mpz_t(), j + 1))
        row.push_back(x);
    }
    out.push_back(make_sorted_set(std::move(row)));
  }
  return out;
}

PGConstruction pg_set(std::size_t n, std::optional<std::size_t> k_override) {
  if (n < 4) throw InvalidInput("pg_set: N must be >= 4");
  PGConstruction c;
  c.N = n;
  if (k_override) {
    if (*k_override == 0) throw InvalidInput("pg_set: K must be >= 1");
    c.K = *k_override;
  } else {
    // smallest K with K^4 >= N
    std::size_t k = 1;
    while (BigInt(static_cast<unsigned long>(k)) * k * k * k < static_cast<unsigned long>(n)) ++k;
    c.K = k;
  }
  if (c.K > 62) throw InvalidInput("pg_set: K too large");
  c.t = (n + c.K - 1) / c.K;
  c.P = first_odd_primes(c.t);
  std::vector<Rational> g;
  for (std::size_t i = 1; i <= c.K; ++i) g.emplace_back(BigInt(1) << static_cast<mp_bitcnt_t>(i));
  c.G = make_sorted_set(std::move(g));
  std::vector<Rational> a;
  a.reserve(c.t * c.K);
  for (auto p : c.P)
    for (const auto& x : c.G) a.emplace_back(x * static_cast<unsigned long>(p));
  c.A = FiniteRealSet(std::move(a));
  if (c.A.size() != c.t * c.K) throw InvalidInput("pg_set: products not distinct");
  return c;
}

DoublingAudit mult_doubling_audit(const PGConstruction& c, const Rational& constant) {
  DoublingAudit out;
  out.value = higher_sumset_size(c.A, Sign::plus, Kind::multiplicative);
  out.product_set_size = combine(c.A, c.A, SetOp::prod).size();
  const Rational n(static_cast<unsigned long>(c.N));
  const Rational factor = constant * (n * n + n * n * n / Rational(static_cast<unsigned long>(c.K)));
  out.check = check_bound(Rational(out.value), factor, BigInt(static_cast<unsigned long>(c.N)), 0, 1, 2);
  return out;
}

const char* to_string(Sampler s) {
  switch (s) {
    case Sampler::full: return "full";
    case Sampler::random_half: return "random_half";
    case Sampler::adversarial_half: return "adversarial_half";
  }
  return "?";
}

Sampler parse_sampler(const std::string& name) {
  if (name == "full") return Sampler::full;
  if (name == "random_half") return Sampler::random_half;
  if (name == "adversarial_half") return Sampler::adversarial_half;
  throw InvalidInput("unknown sampler '" + name + "'");
}

FiniteRealSet sample_subset(const FiniteRealSet& a, Sampler s, std::uint64_t seed) {
  const std::size_t half = (a.size() + 1) / 2;
  if (s == Sampler::full) return a;
  if (s == Sampler::random_half) {
    Rng rng(seed);
    return random_subset(rng, a, half);
  }
  const RepFunction diff = rep_function(a, a, SetOp::diff);
  const bool mult = !a.contains_zero();
  const RepFunction quot = mult ? rep_function(a, a, SetOp::quot) : RepFunction{};
  std::vector<std::pair<BigInt, std::size_t>> score(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt sc = 0;
    for (const auto& b : a) {
      const BigInt d = diff.at(a[i] - b);
      sc += d * d;
      if (mult) {
        const BigInt q = quot.at(a[i] / b);
        sc += q * q;
      }
    }
    score[i] = {sc, i};
  }
  std::sort(score.begin(), score.end(), [](const auto& l, const auto& r) {
    return l.first != r.first ? l.first > r.first : l.second > r.second;
  });
  std::vector<bool> drop(a.size(), false);
  for (std::size_t i = 0; i < a.size() - half; ++i) drop[score[i].second] = true;
  std::vector<Rational> keep;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!drop[i]) keep.push_back(a[i]);
  return make_sorted_set(std::move(keep));
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidInput("ols_slope: need >= 2 paired points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw InvalidInput("ols_slope: x values coincide");
  return sxy / sxx;
}

namespace {

double log2_big(const BigInt& v) {
  if (sgn(v) <= 0) return -INFINITY;
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(m) + static_cast<double>(exp);
}

}  // namespace

ScanResult exponent_scan(const std::vector<std::size_t>& ns, Sampler sampler, std::uint64_t seed) {
  if (ns.size() < 2) throw InvalidInput("exponent_scan: need at least two N values");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw InvalidInput("exponent_scan: N values must be strictly increasing");
  ScanResult out;
  out.sampler = sampler;
  out.seed = seed;
  std::vector<double> x, ya, ym;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const PGConstruction c = pg_set(ns[idx]);
    const FiniteRealSet b = sample_subset(c.A, sampler, seed + idx);
    ScanRow row;
    row.N = c.N;
    row.K = c.K;
    row.size_A = c.A.size();
    row.size_B = b.size();
    row.e3_add = energy_k(b, 3, Kind::additive).value;
    row.e3_mult = energy_k(b, 3, Kind::multiplicative).value;
    row.mult_doubling = higher_sumset_size(c.A, Sign::plus, Kind::multiplicative);
    for (const auto& f : c.fibers(b))
      if (!f.empty()) row.fiber_sum_e3 += energy_k(f, 3, Kind::additive).value;
    row.fiber_ok = row.e3_add >= row.fiber_sum_e3;
    row.b_doubling = sampler == Sampler::full ? row.mult_doubling : higher_sumset_size(b, Sign::plus, Kind::multiplicative);
    const BigInt b6 = pow(BigInt(static_cast<unsigned long>(b.size())), 6);
    row.e3_cs_ok = b6 <= row.e3_mult * row.b_doubling && row.b_doubling <= row.mult_doubling;
    x.push_back(std::log2(static_cast<double>(row.size_A)));
    ya.push_back(log2_big(row.e3_add));
    ym.push_back(log2_big(row.e3_mult));
    out.rows.push_back(std::move(row));
  }
  out.slope_add = ols_slope(x, ya);
  out.slope_mult = ols_slope(x, ym);
  return out;
}

namespace {

struct CompositionWalk {
  unsigned cells;  // 2^l
  std::vector<unsigned> weight;
  std::vector<std::uint64_t> factorial;
  std::vector<std::uint64_t>& lhs;

  /// Distributes `left` among cells [cell, cells); denom = Π n_ε! so far.
  void walk(unsigned cell, unsigned left, std::size_t n, std::uint64_t denom) {
    if (cell + 1 == cells) {
      lhs[n + static_cast<std::size_t>(weight[cell]) * left] += factorial.back() / (denom * factorial[left]);
      return;
    }
    for (unsigned m = 0; m <= left; ++m)
      walk(cell + 1, left - m, n + static_cast<std::size_t>(weight[cell]) * m, denom * factorial[m]);
  }
};

}  // namespace

MultinomialResult multinomial_identity(unsigned l, unsigned k) {
  if (l == 0 || k == 0) throw InvalidInput("multinomial_identity: l and k must be >= 1");
  if (l > 5 || k > 7) throw ResourceLimit("multinomial_identity: guard is l <= 5, k <= 7");
  const unsigned cells = 1u << l;
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(l) * k + 1, 0);
  CompositionWalk w{cells, {}, {}, acc};
  for (unsigned e = 0; e < cells; ++e) w.weight.push_back(static_cast<unsigned>(__builtin_popcount(e)));
  w.factorial.push_back(1);
  for (unsigned i = 1; i <= k; ++i) w.factorial.push_back(w.factorial.back() * i);
  // k! <= 5040 and the total Σ lhs = (2^l)^k <= 2^35, so 64-bit sums are exact.
  w.walk(0, k, 0, 1);

  MultinomialResult out;
  for (std::size_t n = 0; n < acc.size(); ++n) {
    out.lhs.emplace_back(static_cast<unsigned long>(acc[n]));
    BigInt rhs;
    mpz_bin_uiui(rhs.get_mpz_t(), static_cast<unsigned long>(l) * k, n);
    out.rhs.push_back(rhs);
    if (out.lhs.back() != rhs && out.holds) {
      out.holds = false;
      out.failing_n = n;
    }
  }
  return out;
}

}  // namespace addcomb
