#include "addcomb/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "addcomb/constructions.hpp"
#include "addcomb/convolution.hpp"
#include "addcomb/decomposition.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/estimates.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/norms.hpp"
#include "addcomb/report.hpp"

namespace addcomb {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.witnesses.size() < 8) r_.witnesses.push_back(describe());
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  void item_time(double s) { r_.max_item_seconds = std::max(r_.max_item_seconds, s); }
  SuiteResult finish(Clock::time_point start) {
    r_.total_seconds = since(start);
    return std::move(r_);
  }

 private:
  SuiteResult r_;
};

std::string show(const FiniteRealSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + to_string(a[i]);
  return s + "}";
}

std::string show(const SparseFunction& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.values.size(); ++i)
    s += (i ? "," : "") + to_string(f.values[i].first) + ":" + to_string(f.values[i].second);
  return s + "}";
}

std::string show(const GroupFunction& f) {
  std::string s = f.group.describe() + " [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += (i ? " " : "") + to_string(f.values[i].re);
    if (!f.values[i].is_real()) s += (sgn(f.values[i].im) < 0 ? "" : "+") + to_string(f.values[i].im) + "i";
  }
  return s + "]";
}

/// Seeds per suite so suites can run alone and still reproduce.
Rng suite_rng(std::uint64_t seed, std::uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); }

FiniteRealSet random_small_set(Rng& rng, std::size_t max_size = 12) {
  return random_integer_set(rng, 1 + rng.below(max_size), -30, 30);
}

BigInt sum_sq(const RepFunction& r) {
  BigInt s = 0;
  for (const auto& [x, c] : r.counts) s += c * c;
  return s;
}

/// #{(a1,b1,a2,b2) : a1 o b1 = a2 o b2}, by direct enumeration.
BigInt brute_energy(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  BigInt n = 0;
  for (const auto& a1 : a)
    for (const auto& b1 : b)
      for (const auto& a2 : a)
        for (const auto& b2 : b) {
          const bool eq = op == SetOp::sum ? a1 + b1 == a2 + b2 : a1 * b1 == a2 * b2;
          if (eq) ++n;
        }
  return n;
}

/// |{(a1 o a, a2 o a)}| by enumerating triples.
std::size_t brute_higher(const FiniteRealSet& a, SetOp op) {
  std::set<std::pair<Rational, Rational>> pts;
  for (const auto& x : a)
    for (const auto& y : a)
      for (const auto& t : a) {
        switch (op) {
          case SetOp::sum: pts.emplace(x + t, y + t); break;
          case SetOp::diff: pts.emplace(x - t, y - t); break;
          case SetOp::prod: pts.emplace(x * t, y * t); break;
          case SetOp::quot: pts.emplace(x / t, y / t); break;
        }
      }
  return pts.size();
}

/// Σ_{x ∈ A∘A} |A o A_x| with the slices built one by one.
BigInt slice_formula(const FiniteRealSet& a, SetOp op, Kind kind) {
  const FiniteRealSet fibers = combine(a, a, kind == Kind::additive ? SetOp::diff : SetOp::quot);
  const SliceKind sk = kind == Kind::additive ? SliceKind::additive : SliceKind::multiplicative;
  BigInt total = 0;
  for (const auto& x : fibers) total += combine(a, slice(a, x, sk), op).size();
  return total;
}

/// E(Δ_k(A), A^k) in the group ℚ^k (additive) or (ℚ*)^k (multiplicative).
BigInt diagonal_energy(const FiniteRealSet& a, unsigned k, Kind kind) {
  std::vector<std::vector<Rational>> tuples{{}};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& t : tuples)
      for (const auto& x : a) {
        next.push_back(t);
        next.back().push_back(x);
      }
    tuples = std::move(next);
  }
  std::map<std::vector<Rational>, unsigned long> reps;
  for (const auto& d : a)
    for (const auto& t : tuples) {
      std::vector<Rational> s = t;
      for (auto& v : s) v = kind == Kind::additive ? Rational(v + d) : Rational(v * d);
      ++reps[s];
    }
  BigInt e = 0;
  for (const auto& [s, c] : reps) e += BigInt(c) * c;
  return e;
}

SparseFunction random_function(Rng& rng, std::size_t max_support) {
  std::vector<std::pair<Rational, BigInt>> v;
  const std::size_t n = 1 + rng.below(max_support);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(Rational(rng.between(-6, 6)), BigInt(rng.between(-3, 3)));
  SparseFunction f(std::move(v));
  if (f.values.empty()) f = SparseFunction({{Rational(0), BigInt(1)}});
  return f;
}

/// Keeps the iterated-convolution tables of the σ identity bounded.
std::size_t commutativity_support(CommutativityMode mode, unsigned k, unsigned l) {
  if (mode != CommutativityMode::sigma) return 8;
  if (k == 4 && l == 4) return 4;
  if (k + l >= 7) return 6;
  return 8;
}

GroupFunction random_real(Rng& rng, const FiniteAbelianGroup& g, long lo, long hi, unsigned max_den = 1) {
  std::vector<Rational> v(g.order());
  for (auto& x : v) {
    x = Rational(rng.between(lo, hi), static_cast<unsigned long>(1 + rng.below(max_den)));
    x.canonicalize();
  }
  return GroupFunction::real(g, v);
}

std::vector<FiniteAbelianGroup> norm_groups() {
  return {FiniteAbelianGroup::cyclic(8), FiniteAbelianGroup::cyclic(12), FiniteAbelianGroup::cyclic(16),
          FiniteAbelianGroup::cube(3)};
}

struct CorpusSet {
  std::string name;
  FiniteRealSet set;
};

/// {AP(n), GP(n), AP ∪ GP, random, PG}; all elements positive.
std::vector<CorpusSet> corpus(std::size_t n, Rng& rng, bool halves_for_union) {
  const std::size_t h = halves_for_union ? n / 2 : n;
  const std::string tag = "(" + std::to_string(n) + ")";
  return {{"AP" + tag, arithmetic_progression(n)},
          {"GP" + tag, geometric_progression(n)},
          {"APuGP" + tag, set_union(arithmetic_progression(h), geometric_progression(h))},
          {"random" + tag, random_integer_set(rng, n, 1, static_cast<long>(n * n * n))},
          {"PG" + tag, pg_set(n).A}};
}

// ---------------------------------------------------------------- suites

SuiteResult identities(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("identities");
  Rng rng = suite_rng(opt.seed, 1);
  for (std::size_t i = 0; i < opt.set_samples; ++i) {
    const FiniteRealSet a = random_small_set(rng), b = random_small_set(rng);
    const std::string ab = show(a) + " " + show(b);

    // Energy through every representation.
    const BigInt e = energy2(a, b, Kind::additive).value;
    s.check(e == brute_energy(a, b, SetOp::sum), [&] { return "E+ brute " + ab; });
    s.check(e == sum_sq(rep_function(a, b, SetOp::sum)), [&] { return "E+ vs sum rep " + ab; });
    s.check(e == sum_sq(rep_function(a, b, SetOp::diff)), [&] { return "E+ vs diff rep " + ab; });
    const FiniteRealSet pair[] = {a, b};
    s.check(e == energy_k(pair, Kind::additive).value, [&] { return "E+ vs (A∘A)(B∘B) " + ab; });
    {
      const SparseFunction fs[] = {indicator(a), indicator(b)};
      BigInt via_table = 0;
      for (const auto& p : conv_table(fs, 2)) via_table += p.value * p.value;
      s.check(e == via_table, [&] { return "E+ vs C_2 table " + ab; });
    }
    const BigInt em = energy2(a, b, Kind::multiplicative).value;
    s.check(em == brute_energy(a, b, SetOp::prod), [&] { return "Ex brute " + ab; });
    const FiniteRealSet as = without_zero(a), bs = without_zero(b);
    if (!as.empty() && !bs.empty()) {
      const BigInt ems = energy2(as, bs, Kind::multiplicative).value;
      s.check(ems == sum_sq(rep_function(as, bs, SetOp::quot)), [&] { return "Ex vs quot rep " + ab; });
      const FiniteRealSet star[] = {as, bs};
      s.check(ems == energy_k(star, Kind::multiplicative).value, [&] { return "Ex vs (A∘A)(B∘B) " + ab; });
    }

    // Higher sumsets through fibers, slices, and triples.
    for (auto sign : {Sign::plus, Sign::minus}) {
      const SetOp op = sign == Sign::plus ? SetOp::sum : SetOp::diff;
      const BigInt lib = higher_sumset_size(a, sign, Kind::additive);
      s.check(lib == brute_higher(a, op), [&] { return "|A^2±Δ| brute " + show(a); });
      s.check(lib == slice_formula(a, op, Kind::additive), [&] { return "|A^2±Δ| slices " + show(a); });
      if (!as.empty()) {
        const SetOp mop = sign == Sign::plus ? SetOp::prod : SetOp::quot;
        const BigInt mlib = higher_sumset_size(as, sign, Kind::multiplicative);
        s.check(mlib == brute_higher(as, mop), [&] { return "|A^2·/Δ| brute " + show(as); });
        s.check(mlib == slice_formula(as, mop, Kind::multiplicative), [&] { return "|A^2·/Δ| slices " + show(as); });
      }
    }

    // E_{k+1}(A) = E(Δ_k(A), A^k), |A| <= 10.
    const FiniteRealSet small = a.size() <= 10 ? a : make_sorted_set(std::vector<Rational>(a.begin(), a.begin() + 10));
    const FiniteRealSet small_star = without_zero(small);
    for (unsigned k : {2u, 3u}) {
      s.check(energy_k(small, k + 1, Kind::additive).value == diagonal_energy(small, k, Kind::additive),
              [&] { return "diagonal k=" + std::to_string(k) + " " + show(small); });
      if (!small_star.empty())
        s.check(energy_k(small_star, k + 1, Kind::multiplicative).value ==
                    diagonal_energy(small_star, k, Kind::multiplicative),
                [&] { return "diagonal x k=" + std::to_string(k) + " " + show(small_star); });
    }

    // Commutativity identities for C_l.
    for (auto mode : {CommutativityMode::scalar, CommutativityMode::multi_scalar, CommutativityMode::sigma}) {
      const unsigned k = 2 + static_cast<unsigned>(rng.below(3));
      const unsigned l = 2 + static_cast<unsigned>(rng.below(3));
      const std::size_t supp = commutativity_support(mode, k, l);
      std::vector<SparseFunction> f, g;
      const unsigned nf = mode == CommutativityMode::scalar ? l : k;
      for (unsigned j = 0; j < nf; ++j) {
        f.push_back(random_function(rng, supp));
        if (mode == CommutativityMode::scalar) g.push_back(random_function(rng, supp));
      }
      const auto [lhs, rhs] = commutativity_check(f, g, l, mode);
      s.check(lhs == rhs, [&] {
        std::string w = "C_l mode=" + std::to_string(static_cast<int>(mode)) + " k=" + std::to_string(k) +
                        " l=" + std::to_string(l) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
        for (const auto& x : f) w += " " + show(x);
        return w;
      });
    }
  }
  return s.finish(start);
}

SuiteResult inequalities(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("inequalities");
  Rng rng = suite_rng(opt.seed, 1);  // same corpus as the identity suite
  for (std::size_t i = 0; i < opt.set_samples; ++i) {
    const FiniteRealSet a = random_small_set(rng), b = random_small_set(rng);
    const std::string ab = show(a) + " " + show(b);
    const FiniteRealSet as = without_zero(a), bs = without_zero(b);

    struct Side {
      Kind kind;
      const FiniteRealSet& a;
      const FiniteRealSet& b;
    };
    for (const Side side : {Side{Kind::additive, a, b}, Side{Kind::multiplicative, as, bs}}) {
      if (side.a.empty() || side.b.empty()) continue;
      const std::string kn = side.kind == Kind::additive ? "+" : "x";
      const BigInt na = side.a.size(), nb = side.b.size();
      const BigInt e = energy2(side.a, side.b, side.kind).value;
      s.check(e <= na * na * nb && e <= nb * nb * na && e * e <= na * na * na * nb * nb * nb,
              [&] { return "E" + kn + " upper band " + ab; });
      const SetOp ops[2] = {side.kind == Kind::additive ? SetOp::sum : SetOp::prod,
                            side.kind == Kind::additive ? SetOp::diff : SetOp::quot};
      for (SetOp op : ops)
        s.check(e * BigInt(combine(side.a, side.b, op).size()) >= na * na * nb * nb,
                [&] { return "E" + kn + " Cauchy-Schwarz lower " + ab; });

      const BigInt e2 = energy2(side.a, side.a, side.kind).value;
      const BigInt e3 = energy_k(side.a, 3, side.kind).value;
      s.check(e2 * e2 <= e3 * na * na, [&] { return "E" + kn + " Holder E2^2 <= E3|A|^2 " + show(side.a); });
      const BigInt n6 = pow(na, 6);
      for (auto sign : {Sign::plus, Sign::minus})
        s.check(n6 <= e3 * higher_sumset_size(side.a, sign, side.kind),
                [&] { return "E3" + kn + " |A|^6 <= E3|A^2±Δ| " + show(side.a); });

      const BigInt e3ab = energy_k_pair(side.a, side.b, 3, side.kind).value;
      for (std::size_t tau = 1; tau <= std::min(side.a.size(), side.b.size()); tau *= 2) {
        const BigInt t = static_cast<unsigned long>(tau);
        const BigInt st = threshold_set(side.a, side.b, Rational(t), side.kind).size();
        s.check(t * t * t * st <= e3ab, [&] { return "tau^3|S_tau| <= E3" + kn + " tau=" + to_string(t) + " " + ab; });
      }

      // Random disjoint decomposition of A into up to three labelled parts.
      std::vector<std::vector<Rational>> parts(3);
      for (const auto& x : side.a) parts[rng.below(3)].push_back(x);
      std::vector<Rational> terms;
      for (auto& p : parts)
        if (!p.empty()) terms.emplace_back(energy_k_pair(make_sorted_set(p), side.b, 3, side.kind).value);
      const Verdict v = root_sum_compare(Rational(e3ab), terms, 3);
      s.check(v == Verdict::holds, [&] { return "E3" + kn + " subadditivity " + std::string(to_string(v)) + " " + ab; });
    }
  }
  return s.finish(start);
}

SuiteResult norms(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("norms");
  Rng rng = suite_rng(opt.seed, 3);
  for (const auto& g : norm_groups()) {
    for (unsigned k : {2u, 3u, 4u}) {
      for (std::size_t i = 0; i < opt.norm_pairs; ++i) {
        const GroupFunction f = random_real(rng, g, -3, 3), h = random_real(rng, g, -3, 3);
        const auto r = triangle_check(f, h, k);
        s.check(r.verdict == Verdict::holds, [&] {
          return "triangle k=" + std::to_string(k) + " " + to_string(r.verdict) + " f=" + show(f) + " g=" + show(h);
        });
      }
    }
    for (auto [k, l] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {4u, 2u}}) {
      for (std::size_t i = 0; i < opt.norm_pairs; ++i) {
        const GroupFunction f = random_real(rng, g, -3, 3), h = random_real(rng, g, -3, 3);
        const auto r = triangle_check(f, h, k, l);
        s.check(r.verdict == Verdict::holds, [&] {
          return "triangle (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ") " + to_string(r.verdict) +
                 " f=" + show(f) + " g=" + show(h);
        });
        if (i < 5) {
          s.check(ekl_raw(f, k, l, EklOrder::over_k) == ekl_raw(f, k, l, EklOrder::over_l),
                  [&] { return "E_{k,l} orders differ " + show(f); });
        }
      }
    }
    for (std::size_t i = 0; i < 10; ++i) {
      const GroupFunction f = random_real(rng, g, -3, 3);
      s.check(ekl_raw(f, 2, 2, EklOrder::over_k) == ek_raw(f, 2), [&] { return "E_{2,2} != E_2 " + show(f); });
      for (unsigned k : {2u, 3u, 4u}) {
        const Rational exact = ek_raw(f, k);
        if (k <= 3) s.check(exact == ek_raw_ck(f, k), [&] { return "E_k vs Σ|C_k|^2 " + show(f); });
        if (g.type() == FiniteAbelianGroup::Type::cube)
          s.check(exact == ek_raw_walsh(f, k), [&] { return "E_k vs Walsh " + show(f); });
        const long double scale = std::max<long double>(1, ek_raw(f.abs_real(), k).get_d());
        s.check(std::fabs(ek_raw_fourier(f, k) - static_cast<long double>(exact.get_d())) <= 1e-9L * scale,
                [&] { return "E_k vs DFT k=" + std::to_string(k) + " " + show(f); });
      }
      // Hölder step with one to three real pairs.
      std::vector<std::pair<GroupFunction, GroupFunction>> pairs;
      const std::size_t np = 1 + rng.below(3);
      for (std::size_t j = 0; j < np; ++j) pairs.emplace_back(random_real(rng, g, -3, 3), random_real(rng, g, -3, 3));
      const auto hr = holder_ck_check(pairs);
      s.check(hr.verdict == Verdict::holds, [&] { return "Holder " + std::string(to_string(hr.verdict)); });
    }
    // Complex functions through the modulus enclosure.
    for (std::size_t i = 0; i < 10; ++i) {
      std::vector<GaussianRational> fv(g.order()), hv(g.order());
      for (auto& z : fv) z = {Rational(rng.between(-3, 3)), Rational(rng.between(-3, 3))};
      for (auto& z : hv) z = {Rational(rng.between(-3, 3)), Rational(rng.between(-3, 3))};
      const GroupFunction f(g, fv), h(g, hv);
      for (unsigned k : {2u, 3u}) {
        const auto r = triangle_check(f, h, k);
        s.check(r.verdict == Verdict::holds, [&] { return "complex triangle " + show(f) + " " + show(h); });
      }
    }
  }
  // Fourier identities on rational-valued functions, N <= 256.
  for (const auto& g : {FiniteAbelianGroup::cyclic(8), FiniteAbelianGroup::cyclic(64), FiniteAbelianGroup::cyclic(256),
                        FiniteAbelianGroup::cube(3), FiniteAbelianGroup::cube(8)}) {
    for (std::size_t i = 0; i < 5; ++i) {
      const GroupFunction f = random_real(rng, g, -9, 9, 5), h = random_real(rng, g, -9, 9, 5);
      const long double w = fourier_identities(f, h).worst();
      s.check(w <= 1e-9L, [&] { return g.describe() + " Fourier identity error " + std::to_string(static_cast<double>(w)); });
    }
  }
  // Zero-norm contract, exhaustive over {−1,0,1}^ℤ₆.
  const auto z6 = FiniteAbelianGroup::cyclic(6);
  for (unsigned k : {2u, 4u}) {
    for (unsigned code = 0; code < 729; ++code) {
      std::vector<Rational> v(6);
      unsigned c = code;
      for (auto& x : v) {
        x = static_cast<long>(c % 3) - 1;
        c /= 3;
      }
      const GroupFunction f = GroupFunction::real(z6, v);
      const auto r = zero_norm_check(f, k);
      const bool status_ok = (r.status == ZeroNorm::f_is_zero) == f.is_zero();
      s.check(r.consistent && status_ok, [&] { return "zero norm k=" + std::to_string(k) + " " + show(f); });
    }
  }
  return s.finish(start);
}

SuiteResult cube_examples(const VerifyOptions&) {
  const auto start = Clock::now();
  Suite s("cube_examples");
  for (unsigned n : {2u, 3u}) {
    const auto g = FiniteAbelianGroup::cube(n);
    const std::string tag = "n=" + std::to_string(n);
    const BigInt two_4n = BigInt(1) << (4 * n);

    const GroupFunction f = cube_character(g, (std::size_t{1} << n) - 1);
    const Rational raw3 = ek_raw(f, 3);
    s.check(sgn(raw3) == 0, [&] { return tag + " odd-k raw " + to_string(raw3); });
    s.check(ek_raw_walsh(f, 3) == 0, [&] { return tag + " odd-k Walsh form nonzero"; });
    s.check(ek_raw(f, 2) == Rational(BigInt(1) << (3 * n)), [&] { return tag + " even-k raw"; });
    s.check(ek_raw(f, 5) == 0, [&] { return tag + " k=5 raw"; });
    const long double scale3 = ek_raw(f.abs_real(), 3).get_d();
    s.check(std::fabs(ek_raw_fourier(f, 3)) <= 1e-9L * scale3, [&] { return tag + " odd-k DFT form"; });
    s.check(std::fabs(ek_raw_fourier(f, 2) / ek_raw(f, 2).get_d() - 1) <= 1e-9L, [&] { return tag + " even-k DFT"; });
    s.note(tag + ": E_3 raw of (-1)^{x1+..+xn} = " + to_string(raw3));

    // λ' = e1, λ'' = e2, λ''' = e1 + e2.
    const GroupFunction f1 = cube_character(g, 1), f2 = cube_character(g, 2), f3 = cube_character(g, 3);
    const auto hr = holder_ck_check({{f1, f1}, {f2, f2}, {f3, f3}});
    s.check(hr.sigma == Rational(two_4n), [&] { return tag + " triple sum " + to_string(hr.sigma); });
    s.check(hr.verdict == Verdict::holds, [&] { return tag + " triple Holder with moduli"; });
    for (const auto* fj : {&f1, &f2, &f3}) {
      s.check(sgn(ek_raw(*fj, 3)) == 0, [&] { return tag + " per-factor Σ(f∘f)^3 nonzero"; });
      s.check(std::fabs(ek_raw_fourier(*fj, 3)) <= 1e-9L * scale3, [&] { return tag + " per-factor DFT form"; });
    }
    s.note(tag + ": triple scalar product = " + to_string(hr.sigma));
  }
  return s.finish(start);
}

SuiteResult multinomial(const VerifyOptions&) {
  const auto start = Clock::now();
  Suite s("multinomial");
  for (unsigned l = 1; l <= 4; ++l)
    for (unsigned k = 1; k <= 6; ++k) {
      const auto r = multinomial_identity(l, k);
      s.check(r.holds, [&] {
        return "l=" + std::to_string(l) + " k=" + std::to_string(k) + " n=" + std::to_string(*r.failing_n);
      });
    }
  const auto r21 = multinomial_identity(2, 1), r22 = multinomial_identity(2, 2);
  s.check(r21.lhs[1] == 2, [] { return "l=2 k=1 n=1 lhs != 2"; });
  s.check(r22.lhs[2] == 6, [] { return "l=2 k=2 n=2 lhs != 6"; });
  return s.finish(start);
}

SuiteResult brackets(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("brackets");
  Rng rng = suite_rng(opt.seed, 6);
  FamilyConfig fc;
  fc.seed = opt.seed;
  for (std::size_t n : {16u, 32u, 64u}) {
    for (const auto& [name, a] : corpus(n, rng, false)) {
      const auto t0 = Clock::now();
      const CandidateFamily fam = candidate_family(a, fc);
      const Rational na = a.size();
      for (Kind kind : {Kind::additive, Kind::multiplicative}) {
        const std::string tag = name + " " + to_string(kind);
        const auto iv = q_interval(a, fam, kind);
        s.check(iv.lower >= 1 && iv.lower <= iv.upper && iv.upper <= na, [&] {
          return tag + " bracket [" + to_string(iv.lower) + ", " + to_string(iv.upper) + "]";
        });
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
          const FiniteRealSet b = kind == Kind::multiplicative ? without_zero(fam.members[i]) : fam.members[i];
          if (b.empty()) continue;
          const Rational nb = b.size();
          s.check(Rational(energy_k_pair(a, b, 3, kind).value) <= iv.upper * na * nb * nb,
                  [&] { return tag + " E3(A,B) above q_upper for " + fam.tags[i]; });
        }
        const auto self_only = q_interval(a, CandidateFamily{{a}, {"self"}}, kind);
        s.check(self_only.lower <= iv.lower && self_only.upper == iv.upper,
                [&] { return tag + " refinement not monotone"; });
        const auto d = d_sandwich(a, fam, kind);
        s.check(d.lower >= 1 && d.lower <= d.upper && d.upper == iv.upper, [&] { return tag + " D sandwich"; });
        const auto ws = universal_witnesses(a, kind);
        s.check(d_cover_upper(a, ws[0]) == na, [&] { return tag + " singleton cover value"; });
        const FiniteRealSet aa = combine(a, a, kind == Kind::additive ? SetOp::sum : SetOp::prod);
        const Rational naa = aa.size();
        s.check(d_cover_upper(a, ws[1]) == naa * naa / (na * na), [&] { return tag + " full cover value"; });
        const auto gs = gen_sigma_check(a, fam.members.back(), kind);
        s.check(gs.certified, [&] { return tag + " E3(A1,A2)/(|A1||A2|^2) above q_upper"; });
        if (n == 64 && name == "AP(64)" && kind == Kind::additive) {
          s.check(iv.lower >= 16, [&] { return "AP(64) additive q lower " + to_string(iv.lower); });
          s.note("AP(64) additive q in [" + to_string(iv.lower) + ", " + to_string(iv.upper) + "]");
        }
        if (n == 64 && name == "GP(64)" && kind == Kind::multiplicative) {
          s.check(iv.lower >= 16, [&] { return "GP(64) multiplicative q lower " + to_string(iv.lower); });
          s.note("GP(64) multiplicative q in [" + to_string(iv.lower) + ", " + to_string(iv.upper) + "]");
        }
      }
      s.item_time(since(t0));
    }
  }
  return s.finish(start);
}

SuiteResult decomposition(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("decomposition");
  Rng rng = suite_rng(opt.seed, 7);
  SplitConfig cfg;
  cfg.family.seed = opt.seed;
  for (std::size_t n : {64u, 128u, 256u}) {
    for (const auto& [name, a] : corpus(n, rng, true)) {
      const auto t0 = Clock::now();
      const DecompositionTrace t = balog_wooley_split(a, cfg);
      s.check(set_intersection(t.B, t.C).empty() && set_union(t.B, t.C) == a,
              [&] { return name + " not a partition"; });
      FiniteRealSet pieces, current = a;
      bool disjoint = true, shrinking = true, sizes = true;
      for (const auto& r : t.rounds) {
        disjoint = disjoint && set_intersection(pieces, r.extraction.piece).empty();
        shrinking = shrinking && r.C == current && !r.extraction.piece.empty() && is_subset(r.extraction.piece, r.C);
        sizes = sizes && r.piece_size_ok;
        pieces = set_union(pieces, r.extraction.piece);
        current = set_difference(current, r.extraction.piece);
      }
      s.check(disjoint && pieces == t.B && current == t.C, [&] { return name + " B is not the union of the pieces"; });
      s.check(shrinking, [&] { return name + " C_j not strictly decreasing"; });
      s.check(sizes, [&] { return name + " extracted piece below |C_j|/(C sqrt(M) log^2|A|)"; });
      for (const auto& row : t.certificate.rows)
        s.check(row.check.verdict == Verdict::holds, [&] {
          return name + " " + row.name + " = " + to_string(row.value) + " exceeds 100·" + row.bound + "·log^3 (" +
                 to_string(row.check.verdict) + ")";
        });
      const std::string first = dump(to_json(t));
      if (opt.rerun_decompositions)
        s.check(dump(to_json(balog_wooley_split(a, cfg))) == first, [&] { return name + " rerun differs"; });
      const double secs = since(t0) / (opt.rerun_decompositions ? 2 : 1);
      s.item_time(secs);
      s.check(secs < 300, [&] { return name + " took " + std::to_string(secs) + " s"; });
      s.note(name + ": |A|=" + std::to_string(a.size()) + " rounds=" + std::to_string(t.rounds.size()) +
             " |B|=" + std::to_string(t.B.size()) + " |C|=" + std::to_string(t.C.size()));
    }
  }
  const FiniteRealSet gp = geometric_progression(64), ap = arithmetic_progression(64);
  for (const auto& [name, a, mode] : {std::tuple{"GP(64) mult_shift", gp, ShiftMode::mult_shift},
                                      std::tuple{"AP(64) add_scale", ap, ShiftMode::add_scale}}) {
    const auto t = shifted_split(a, 1, mode, cfg);
    s.check(set_intersection(t.B, t.C).empty() && set_union(t.B, t.C) == a,
            [&] { return std::string(name) + " not a partition"; });
    std::string line = std::string(name) + ":";
    for (const auto& row : t.certificate.rows) line += " " + row.name + "=" + to_string(row.value) + " (ratio " + row.check.ratio_decimal + ")";
    s.note(line);
  }
  return s.finish(start);
}

SuiteResult construction(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("construction");
  const auto p16 = pg_set(16);
  s.check(p16.K == 2 && p16.t == 8 && p16.A.size() == 16 && p16.P.front() == 3 && p16.P.back() == 23,
          [] { return "pg_set(16) shape"; });
  const auto p1 = pg_set(16, 1);
  s.check(p1.A == dilate(FiniteRealSet(std::vector<Rational>(p1.P.begin(), p1.P.end())), 2),
          [] { return "pg_set(16, K=1) is not 2P"; });

  const std::vector<std::size_t> ns{64, 128, 256, 512, 1024};
  const auto t0 = Clock::now();
  const ScanResult scan = exponent_scan(ns, Sampler::full, opt.seed);
  s.item_time(since(t0));
  s.check(scan.slope_add >= 3.0, [&] { return "additive slope " + std::to_string(scan.slope_add); });
  s.check(scan.slope_mult >= 3.0, [&] { return "multiplicative slope " + std::to_string(scan.slope_mult); });
  s.note("slope log2 E3+ = " + std::to_string(scan.slope_add) + ", slope log2 E3x = " + std::to_string(scan.slope_mult));
  for (const auto& row : scan.rows) {
    const std::string tag = "N=" + std::to_string(row.N);
    const auto c = pg_set(row.N);
    s.check(row.size_A == c.t * c.K && c.A.size() == row.size_A, [&] { return tag + " |A| != tK"; });
    FiniteRealSet un;
    std::size_t total = 0;
    for (const auto& f : c.fibers(c.A)) {
      total += f.size();
      un = set_union(un, f);
    }
    s.check(un == c.A && total == c.A.size(), [&] { return tag + " fibers do not partition A"; });
    s.check(row.fiber_ok, [&] { return tag + " E3+(B) < Σ E3+(B_j)"; });
    s.check(row.e3_cs_ok, [&] { return tag + " |B|^6 <= E3x(B)|B^2·Δ(B)| failed"; });
    const Rational nq = static_cast<unsigned long>(row.N);
    const Rational factor = 50 * (nq * nq + nq * nq * nq / Rational(static_cast<unsigned long>(row.K)));
    const auto chk = check_bound(Rational(row.mult_doubling), factor, BigInt(static_cast<unsigned long>(row.N)), 0, 1, 2);
    s.check(chk.verdict == Verdict::holds, [&] { return tag + " |A^2·Δ(A)| = " + to_string(row.mult_doubling) +
                                                         " above 50(N^2+N^3/K)log^2 N"; });
    s.check(row.mult_doubling >= BigInt(combine(c.A, c.A, SetOp::prod).size()), [&] { return tag + " audit below |AA|"; });
    s.note(tag + ": |A|=" + std::to_string(row.size_A) + " E3+=" + to_string(row.e3_add) + " E3x=" + to_string(row.e3_mult) +
           " |A^2·Δ(A)|=" + to_string(row.mult_doubling) + " audit ratio " + chk.ratio_decimal);
  }
  return s.finish(start);
}

SuiteResult dd_ratio(const VerifyOptions& opt) {
  const auto start = Clock::now();
  Suite s("dd_ratio");
  Rng rng = suite_rng(opt.seed, 6);  // the bracket corpus
  FamilyConfig fc;
  fc.seed = opt.seed;
  for (std::size_t n : {16u, 32u, 64u}) {
    for (const auto& [name, a] : corpus(n, rng, false)) {
      const auto r = dd_check(a, candidate_family(a, fc), Slack{4, 2});
      s.check(r.holds, [&] {
        return name + " |A| > 4 log^2|A| d+* dx* with d+*=" + to_string(r.d_plus.value) + " dx*=" + to_string(r.d_times.value);
      });
    }
  }
  Rng rr = suite_rng(opt.seed, 9);
  SplitConfig cfg;
  cfg.family.seed = opt.seed;
  for (std::size_t i = 0; i < opt.ratio_samples; ++i) {
    const FiniteRealSet a = random_integer_set(rr, 3 + rr.below(14), -30, 30);
    const auto t0 = Clock::now();
    const auto r = ratio_split(a, cfg);
    s.item_time(since(t0));
    s.check(r.sizes_ok, [&] {
      return "ratio split sizes |R|=" + std::to_string(r.R.size()) + " |R'|=" + std::to_string(r.R1.size()) +
             " |R''|=" + std::to_string(r.R2.size()) + " A=" + show(a);
    });
    s.check(r.reflection_ok, [&] { return "R != 1 - R for A=" + show(a); });
    s.check(r.inversion_ok, [&] { return "(R*)^-1 != R* for A=" + show(a); });
  }
  for (std::size_t i = 0; i < 10; ++i) {
    const FiniteRealSet a = random_integer_set(rr, 2 + rr.below(19), -50, 50);
    const FiniteRealSet r = ratio_set(a), rs = without_zero(r);
    s.check(reflect(r, 1) == r && divide_into(rs, 1) == rs, [&] { return "R[A] identities for A=" + show(a); });
  }
  return s.finish(start);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "inequalities",  "norms",        "cube_examples", "multinomial",
                                              "brackets",   "decomposition", "construction", "dd_ratio"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "identities") return identities(options);
  if (name == "inequalities") return inequalities(options);
  if (name == "norms") return norms(options);
  if (name == "cube_examples") return cube_examples(options);
  if (name == "multinomial") return multinomial(options);
  if (name == "brackets") return brackets(options);
  if (name == "decomposition") return decomposition(options);
  if (name == "construction") return construction(options);
  if (name == "dd_ratio") return dd_ratio(options);
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace addcomb
