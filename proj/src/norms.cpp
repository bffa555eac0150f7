#include "addcomb/norms.hpp"

#include <bit>
#include <cmath>

#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"

namespace addcomb {
namespace {

std::vector<Rational> real_values(const GroupFunction& f) {
  if (!f.is_real()) throw InvalidInput("real-valued function required");
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& z : f.values) v.push_back(z.re);
  return v;
}

bool nonzero(const Rational& v) { return sgn(v) != 0; }
bool nonzero(const GaussianRational& v) { return !v.is_zero(); }

/// Calls fn(C_m(f)(x)) for every x ∈ Γ^{m−1}, x enumerated in mixed-radix order.
template <class V, class Fn>
void for_each_c(const FiniteAbelianGroup& G, const std::vector<V>& f, unsigned m, Fn&& fn) {
  const std::size_t n = G.order();
  std::vector<std::size_t> supp;
  for (std::size_t z = 0; z < n; ++z)
    if (nonzero(f[z])) supp.push_back(z);
  unsigned __int128 work = supp.size();
  for (unsigned i = 1; i < m; ++i) {
    work *= n;
    if (work > limits().max_table) check_guard(UINT64_MAX, limits().max_table, "dense generalized convolution");
  }
  std::vector<std::size_t> x(m - 1, 0);
  V acc, term;
  while (true) {
    acc = V{};
    for (auto z : supp) {
      term = f[z];
      for (unsigned i = 0; i + 1 < m; ++i) {
        const V& v = f[G.add(z, x[i])];
        if (!nonzero(v)) {
          term = V{};
          break;
        }
        term = term * v;
      }
      acc += term;
    }
    fn(acc);
    std::size_t pos = 0;
    while (pos < x.size() && ++x[pos] == n) x[pos++] = 0;
    if (pos == x.size()) break;
  }
}

Rational pow_q(const Rational& q, unsigned k) { return pow(q, k); }

std::string root_decimal(const Rational& raw, unsigned m) {
  if (sgn(raw) < 0) return "nan";
  return root(raw, m, 256, Round::nearest).to_decimal(64);
}

void check_ekl_params(unsigned k, unsigned l) {
  if (k < 2 || l < 2) throw InvalidInput("E_{k,l}: k, l must be >= 2");
  if (k % 2 && l % 2) throw InvalidInput("E_{k,l}: either k or l must be even");
}

Rational ekl_cheapest(const GroupFunction& f, unsigned k, unsigned l) {
  return ekl_raw(f, k, l, k <= l ? EklOrder::over_k : EklOrder::over_l);
}

}  // namespace

Rational ek_raw(const GroupFunction& f, unsigned k) {
  if (k < 1) throw InvalidInput("E_k: k must be >= 1");
  const GroupFunction c = correlate(conjugate(f), f);
  GaussianRational total;
  for (const auto& z : c.values)
    if (!z.is_zero()) total += pow(z, k);
  if (!total.is_real()) throw InvalidInput("E_k: nonreal value (internal inconsistency)");
  if (sgn(total.re) < 0) throw InvalidInput("E_k: negative value (internal inconsistency)");
  return total.re;
}

Rational ek_raw_ck(const GroupFunction& f, unsigned k) {
  if (k < 2) throw InvalidInput("E_k via C_k: k must be >= 2");
  Rational total = 0;
  for_each_c(f.group, f.values, k, [&](const GaussianRational& c) { total += c.norm2(); });
  return total;
}

long double ek_raw_fourier(const GroupFunction& f, unsigned k) {
  if (k < 1) throw InvalidInput("E_k: k must be >= 1");
  const auto& G = f.group;
  const std::size_t n = G.order();
  const Spectrum fh = dft(f);
  std::vector<long double> h(n), acc(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = std::norm(fh[i]);
  acc = h;
  for (unsigned step = 1; step < k; ++step) {
    std::vector<long double> next(n, 0.0L);
    for (std::size_t y = 0; y < n; ++y)
      if (acc[y] != 0)
        for (std::size_t w = 0; w < n; ++w) next[G.add(y, w)] += acc[y] * h[w];
    acc = std::move(next);
  }
  return acc[0] / std::pow(static_cast<long double>(n), static_cast<long double>(k - 1));
}

Rational ek_raw_walsh(const GroupFunction& f, unsigned k) {
  if (k < 1) throw InvalidInput("E_k: k must be >= 1");
  const auto& G = f.group;
  const std::size_t n = G.order();
  const auto fh = walsh(f);
  std::vector<Rational> h(n), acc;
  for (std::size_t i = 0; i < n; ++i) h[i] = fh[i].norm2();
  acc = h;
  for (unsigned step = 1; step < k; ++step) {
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t y = 0; y < n; ++y)
      if (sgn(acc[y]) != 0)
        for (std::size_t w = 0; w < n; ++w)
          if (sgn(h[w]) != 0) next[G.add(y, w)] += acc[y] * h[w];
    acc = std::move(next);
  }
  return acc[0] / pow(Rational(static_cast<unsigned long>(n)), k - 1);
}

NormReport ek_norm(const GroupFunction& f, unsigned k) {
  NormReport r;
  r.k = k;
  r.l = 2;
  r.raw = ek_raw(f, k);
  r.root = root_decimal(r.raw, 2 * k);
  return r;
}

Rational ekl_raw(const GroupFunction& f, unsigned k, unsigned l, EklOrder order) {
  check_ekl_params(k, l);
  const auto v = real_values(f);
  const unsigned m = order == EklOrder::over_k ? k : l;
  const unsigned p = order == EklOrder::over_k ? l : k;
  Rational total = 0;
  for_each_c(f.group, v, m, [&](const Rational& c) {
    if (sgn(c) != 0) total += pow_q(c, p);
  });
  if (sgn(total) < 0) throw InvalidInput("E_{k,l}: negative value (internal inconsistency)");
  return total;
}

NormReport ekl_norm(const GroupFunction& f, unsigned k, unsigned l) {
  NormReport r;
  r.k = k;
  r.l = l;
  r.raw = ekl_cheapest(f, k, l);
  r.root = root_decimal(r.raw, k * l);
  return r;
}

std::pair<BigFloat, BigFloat> abs_raw_enclosure(const GroupFunction& f, unsigned k, mpfr_prec_t prec) {
  const auto& G = f.group;
  const std::size_t n = G.order();
  std::vector<BigFloat> lo, hi;
  std::vector<std::size_t> supp;
  lo.reserve(n);
  hi.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Rational q = f.values[x].norm2();
    lo.push_back(sqrt(BigFloat(q, prec, Round::down), Round::down));
    hi.push_back(sqrt(BigFloat(q, prec, Round::up), Round::up));
    if (sgn(q) != 0) supp.push_back(x);
  }
  BigFloat raw_lo(prec), raw_hi(prec), t(prec);
  std::vector<BigFloat> c_lo(n, BigFloat(prec)), c_hi(n, BigFloat(prec));
  for (auto y : supp)
    for (auto w : supp) {
      const std::size_t x = G.sub(w, y);
      c_lo[x] = add(c_lo[x], mul(lo[y], lo[w], Round::down), Round::down);
      c_hi[x] = add(c_hi[x], mul(hi[y], hi[w], Round::up), Round::up);
    }
  for (std::size_t x = 0; x < n; ++x) {
    mpfr_pow_ui(t.get(), c_lo[x].get(), k, MPFR_RNDD);
    raw_lo = add(raw_lo, t, Round::down);
    mpfr_pow_ui(t.get(), c_hi[x].get(), k, MPFR_RNDU);
    raw_hi = add(raw_hi, t, Round::up);
  }
  return {raw_lo, raw_hi};
}

TriangleResult triangle_check(const GroupFunction& f, const GroupFunction& g, unsigned k, unsigned l) {
  if (!(f.group == g.group)) throw InvalidInput("triangle_check: functions live on different groups");
  if (k < 2) throw InvalidInput("triangle_check: k must be >= 2");
  TriangleResult out;
  const GroupFunction sum = f + g;
  const unsigned m = k * l;
  if (l == 2) {
    out.lhs_raw = ek_raw(sum, k);
  } else {
    check_ekl_params(k, l);
    out.lhs_raw = ekl_cheapest(sum, k, l);
  }
  if (f.is_real() && g.is_real()) {
    const GroupFunction af = f.abs_real(), ag = g.abs_real();
    const Rational rf = l == 2 ? ek_raw(af, k) : ekl_cheapest(af, k, l);
    const Rational rg = l == 2 ? ek_raw(ag, k) : ekl_cheapest(ag, k, l);
    const Rational terms[] = {rf, rg};
    out.verdict = root_sum_compare(out.lhs_raw, terms, m);
    out.rhs_f_root = root_decimal(rf, m);
    out.rhs_g_root = root_decimal(rg, m);
    return out;
  }
  if (l != 2) throw InvalidInput("triangle_check: E_{k,l} with l != 2 requires real functions");
  constexpr mpfr_prec_t prec = 512;
  const auto [flo, fhi] = abs_raw_enclosure(f, k, prec);
  const auto [glo, ghi] = abs_raw_enclosure(g, k, prec);
  const BigFloat down[] = {root(flo, m, Round::down), root(glo, m, Round::down)};
  const BigFloat up[] = {root(fhi, m, Round::up), root(ghi, m, Round::up)};
  out.verdict = root_sum_compare_enclosed(out.lhs_raw, down, up, m);
  out.rhs_f_root = down[0].to_decimal(64, Round::down);
  out.rhs_g_root = down[1].to_decimal(64, Round::down);
  return out;
}

HolderResult holder_ck_check(const std::vector<std::pair<GroupFunction, GroupFunction>>& pairs) {
  if (pairs.empty()) throw InvalidInput("holder_ck_check: need at least one pair");
  const unsigned k = static_cast<unsigned>(pairs.size());
  const auto& G = pairs.front().first.group;
  HolderResult out;
  std::vector<Rational> prod(G.order(), Rational(1));
  out.rhs_product = 1;
  for (const auto& [fj, gj] : pairs) {
    if (!(fj.group == G) || !(gj.group == G)) throw InvalidInput("holder_ck_check: mixed groups");
    const GroupFunction c = correlate(fj, gj);
    for (std::size_t x = 0; x < G.order(); ++x) prod[x] *= c.values[x].re;
    out.rhs_product *= ek_raw(fj.abs_real(), k) * ek_raw(gj.abs_real(), k);
  }
  out.sigma = 0;
  for (const auto& v : prod) out.sigma += v;
  out.verdict = pow(out.sigma * out.sigma, k) <= out.rhs_product ? Verdict::holds : Verdict::fails;
  return out;
}

ZeroNormResult zero_norm_check(const GroupFunction& f, unsigned k) {
  if (k < 2 || k % 2) throw InvalidInput("zero_norm_check: k must be even and >= 2");
  const auto v = real_values(f);
  ZeroNormResult out;
  out.raw = ek_raw(f, k);
  Rational l2 = 0;
  for (const auto& x : v) l2 += x * x;
  out.l2_bound = pow(l2, k);
  const bool zero = f.is_zero();
  out.status = zero ? ZeroNorm::f_is_zero : ZeroNorm::f_nonzero_with_positive_norm;
  out.consistent = ((sgn(out.raw) == 0) == zero) && out.raw >= out.l2_bound;
  return out;
}

GroupFunction cube_character(const FiniteAbelianGroup& g, std::size_t lambda) {
  if (g.type() != FiniteAbelianGroup::Type::cube) throw InvalidInput("cube_character: boolean cube required");
  GroupFunction f(g);
  for (std::size_t x = 0; x < g.order(); ++x) f.values[x].re = std::popcount(lambda & x) % 2 ? -1 : 1;
  return f;
}

}  // namespace addcomb
