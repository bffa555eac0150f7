#include "addcomb/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "addcomb/bigfloat.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/generators.hpp"

namespace addcomb {

const char* to_string(UpperSource s) {
  return s == UpperSource::cauchy_schwarz_E3 ? "cauchy_schwarz_E3" : "trivial_cardinality";
}

namespace {

void push_member(CandidateFamily& fam, FiniteRealSet s, std::string tag) {
  if (s.empty()) return;
  for (const auto& m : fam.members)
    if (m == s) return;
  fam.members.push_back(std::move(s));
  fam.tags.push_back(std::move(tag));
}

/// Top-m values of a representation function by multiplicity, ties broken
/// by value.
FiniteRealSet popular(const RepFunction& r, std::size_t m) {
  std::vector<const std::pair<Rational, BigInt>*> order;
  for (const auto& e : r.counts) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->second > b->second; });
  std::vector<Rational> out;
  for (std::size_t i = 0; i < order.size() && i < m; ++i) out.push_back(order[i]->first);
  return FiniteRealSet(std::move(out));
}

Rational size_q(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

}  // namespace

CandidateFamily candidate_family(const FiniteRealSet& a, const FamilyConfig& cfg) {
  if (a.empty()) throw InvalidInput("candidate_family: empty set");
  CandidateFamily fam;
  const std::size_t n = a.size();
  push_member(fam, a, "self");

  if (cfg.translates > 0) {
    const std::size_t t = std::min(cfg.translates, n);
    for (std::size_t j = 0; j < t; ++j) {
      const std::size_t i = t == 1 ? 0 : j * (n - 1) / (t - 1);
      push_member(fam, translate(a, -a[i]), "translate:" + to_string(Rational(-a[i])));
      if (sgn(a[i]) != 0) push_member(fam, dilate(a, 1 / a[i]), "dilate:" + to_string(Rational(1 / a[i])));
    }
  }
  if (cfg.dyadic_blocks) {
    for (std::size_t len = n / 2; len >= 2; len /= 2) {
      const std::size_t starts[] = {0, (n - len) / 2, n - len};
      for (auto s : starts) {
        std::vector<Rational> block(a.begin() + static_cast<std::ptrdiff_t>(s),
                                    a.begin() + static_cast<std::ptrdiff_t>(s + len));
        push_member(fam, make_sorted_set(std::move(block)),
                    "block:" + std::to_string(s) + "+" + std::to_string(len));
      }
    }
  }
  if (cfg.popular > 0) {
    push_member(fam, popular(rep_function(a, a, SetOp::diff), cfg.popular), "popular_differences");
    push_member(fam, popular(rep_function(a, a, SetOp::quot), cfg.popular), "popular_quotients");
  }
  if (cfg.random_subsets) {
    Rng rng(cfg.seed);
    for (std::size_t k : {(n + 3) / 4, (n + 1) / 2})
      push_member(fam, random_subset(rng, a, k), "random:" + std::to_string(k));
  }
  return fam;
}

CertifiedInterval q_interval(const FiniteRealSet& a, const CandidateFamily& family, Kind kind) {
  if (a.empty()) throw InvalidInput("q_interval: empty set");
  if (kind == Kind::multiplicative && a.contains_zero())
    throw InvalidInput("q_interval: multiplicative kind requires 0 not in A");
  CertifiedInterval out;
  out.quantity = "q";
  out.kind = kind;
  const Rational na = size_q(a.size());
  const BigInt e3a = energy_k(a, 3, kind).value;
  out.lower = Rational(e3a) / (na * na * na);
  out.lower_witness = "E3(A)/|A|^3";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const FiniteRealSet b = kind == Kind::multiplicative ? without_zero(family.members[i]) : family.members[i];
    if (b.empty()) continue;
    const Rational nb = size_q(b.size());
    const Rational ratio = Rational(energy_k_pair(a, b, 3, kind).value) / (na * nb * nb);
    if (ratio > out.lower) {
      out.lower = ratio;
      out.lower_witness = family.tags[i];
    }
  }
  const Rational cs = Rational(ceil_sqrt(e3a)) / na;
  if (cs < na) {
    out.upper = cs;
    out.upper_source = UpperSource::cauchy_schwarz_E3;
  } else {
    out.upper = na;
    out.upper_source = UpperSource::trivial_cardinality;
  }
  return out;
}

CertifiedInterval d_sandwich(const FiniteRealSet& a, const CandidateFamily& family, Kind kind, const Slack& slack) {
  CertifiedInterval q = q_interval(a, family, kind);
  CertifiedInterval out = q;
  out.quantity = "D";
  out.heuristic_lower = true;
  // q_lower / (C·polylog), with the polylog rounded up so the quotient is rounded down.
  BigFloat denom = polylog(BigInt(static_cast<unsigned long>(a.size())), slack.c, Round::up);
  mpfr_mul_q(denom.get(), denom.get(), slack.C.get_mpq_t(), MPFR_RNDU);
  BigFloat lower(q.lower, 256, Round::down);
  mpfr_div(lower.get(), lower.get(), denom.get(), MPFR_RNDD);
  Rational l = lower.to_rational();
  out.lower = std::max(Rational(1), l);
  if (out.lower > out.upper) out.lower = out.upper;
  out.lower_witness = q.lower_witness + " / slack";
  return out;
}

Rational d_cover_upper(const FiniteRealSet& a, const SymCoverWitness& w) {
  if (a.empty()) throw InvalidInput("d_cover_upper: empty set");
  if (sgn(w.t) <= 0) throw InvalidInput("d_cover_upper: t must be > 0");
  if (w.Q.empty() || w.R.empty()) throw InvalidInput("d_cover_upper: Q and R must be nonempty");
  if (w.Q.contains_zero() || w.R.contains_zero()) throw InvalidInput("d_cover_upper: Q and R must avoid 0");
  if (std::max(w.Q.size(), w.R.size()) < a.size()) throw InvalidInput("d_cover_upper: max(|Q|,|R|) < |A|");
  if (!is_subset(a, sym_set(w.Q, w.R, w.t, w.kind))) throw InvalidInput("d_cover_upper: A is not covered by Sym_t(Q,R)");
  const Rational q = size_q(w.Q.size()), r = size_q(w.R.size());
  return q * q * r * r / (size_q(a.size()) * w.t * w.t * w.t);
}

std::vector<SymCoverWitness> universal_witnesses(const FiniteRealSet& a, Kind kind) {
  if (a.empty()) throw InvalidInput("universal_witnesses: empty set");
  std::vector<SymCoverWitness> out;
  const Rational t_full = size_q(a.size());
  if (kind == Kind::additive) {
    Rational m = 0;
    for (const auto& x : a) m = std::max(m, Rational(abs(x)));
    const Rational r = m + 1;  // r ∉ A, r ≠ 0
    out.push_back({translate(a, -r), FiniteRealSet{r}, 1, kind});
    const Rational c = 2 * m + 1;  // c ∉ A + A, c ∉ A
    out.push_back({translate(combine(a, a, SetOp::sum), -c), reflect(a, c), t_full, kind});
  } else {
    if (a.contains_zero()) throw InvalidInput("universal_witnesses: multiplicative kind requires 0 not in A");
    out.push_back({a, FiniteRealSet{Rational(1)}, 1, kind});
    out.push_back({combine(a, a, SetOp::prod), divide_into(a, 1), t_full, kind});
  }
  return out;
}

DStar d_star(const FiniteRealSet& a, const CandidateFamily& family, Kind kind) {
  if (a.empty()) throw InvalidInput("d_star: empty set");
  const SetOp op = kind == Kind::additive ? SetOp::prod : SetOp::sum;
  const Rational na = size_q(a.size());
  DStar best{na, "singleton:1"};  // B = {1}: |A·1|²/|A| = |A+1|²/|A| = |A|
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& b = family.members[i];
    if (b.empty()) continue;
    const Rational c = size_q(combine(a, b, op).size());
    const Rational v = c * c / (na * size_q(b.size()));
    if (v < best.value) best = {v, family.tags[i]};
  }
  return best;
}

GenSigmaReport gen_sigma_check(const FiniteRealSet& a1, const FiniteRealSet& a2, Kind kind) {
  if (a1.empty() || a2.empty()) throw InvalidInput("gen_sigma_check: empty set");
  GenSigmaReport out;
  out.kind = kind;
  CandidateFamily only_self{{a1}, {"self"}};
  out.q_upper = q_interval(a1, only_self, kind).upper;
  out.e2 = energy_k_pair(a1, a2, 2, kind).value;
  out.e3 = energy_k_pair(a1, a2, 3, kind).value;
  const double n1 = static_cast<double>(a1.size()), n2 = static_cast<double>(a2.size());
  const double qu = out.q_upper.get_d();
  const double lg = std::max(1.0, std::log2(std::min(n1, n2)));
  out.e2_ratio = out.e2.get_d() / (std::sqrt(qu) * n1 * std::pow(n2, 1.5));
  out.e3_ratio = out.e3.get_d() / (qu * n1 * n2 * n2 * lg);
  const Rational n1q = size_q(a1.size()), n2q = size_q(a2.size());
  out.certified = Rational(out.e3) / (n1q * n2q * n2q) <= out.q_upper;
  return out;
}

DDReport dd_check(const FiniteRealSet& a, const CandidateFamily& family, const Slack& slack) {
  if (a.contains_zero()) throw InvalidInput("dd_check: requires 0 not in A");
  DDReport out;
  out.d_plus = d_star(a, family, Kind::additive);
  out.d_times = d_star(a, family, Kind::multiplicative);
  out.size = size_q(a.size());
  BigFloat bound = polylog(BigInt(static_cast<unsigned long>(a.size())), slack.c, Round::down);
  const Rational factor = slack.C * out.d_plus.value * out.d_times.value;
  mpfr_mul_q(bound.get(), bound.get(), factor.get_mpq_t(), MPFR_RNDD);
  out.holds = compare(out.size, bound) <= 0;
  out.bound_decimal = bound.to_decimal(20, Round::down);
  return out;
}

}  // namespace addcomb
