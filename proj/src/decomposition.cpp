#include "addcomb/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "addcomb/energy.hpp"
#include "addcomb/parallel.hpp"

namespace addcomb {

namespace {

Rational size_q(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

double m_value(const SplitConfig& config, std::size_t a_size) {
  if (config.M) return config.M->get_d();
  return std::pow(static_cast<double>(a_size), 0.4);
}

std::string m_decimal(const SplitConfig& config, std::size_t a_size) {
  if (config.M) return to_string(*config.M);
  const BigInt n2 = BigInt(static_cast<unsigned long>(a_size)) * static_cast<unsigned long>(a_size);
  return root(Rational(n2), 5, 128, Round::nearest).to_decimal(12);
}

std::vector<Rational> tau_grid(const SplitConfig& config, std::size_t a_size) {
  if (!config.tau_grid.empty()) {
    for (const auto& t : config.tau_grid)
      if (t < 1) throw InvalidInput("tau_grid: every τ must be >= 1");
    return config.tau_grid;
  }
  std::vector<Rational> grid;
  for (std::size_t t = 1; t <= std::max<std::size_t>(a_size, 1); t *= 2) grid.emplace_back(static_cast<unsigned long>(t));
  return grid;
}

std::size_t round_limit(const SplitConfig& config, std::size_t a_size) {
  if (config.max_rounds) return config.max_rounds;
  const double lg = std::max(1.0, std::log2(static_cast<double>(a_size)));
  const double v = config.round_constant.get_d() * std::sqrt(std::max(1.0, m_value(config, a_size))) * lg;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(v)));
}

struct MemberBest {
  Rational score = -1;
  Rational tau;
};

/// ⌈log₂ c⌉ for c >= 1.
int ceil_log2(std::uint64_t c) { return c <= 1 ? 0 : static_cast<int>(std::bit_width(c - 1)); }

BigInt piece_count(const FiniteRealSet& s, const FiniteRealSet& g, const Rational& a, Kind kind) {
  BigInt c = 0;
  for (const auto& x : g) {
    if (kind == Kind::multiplicative) {
      if (s.contains(a / x)) ++c;
    } else if (s.contains(a - x)) {
      ++c;
    }
  }
  return c;
}

struct EngineResult {
  std::vector<RoundRecord> rounds;
  FiniteRealSet B, C;
};

EngineResult run_engine(const FiniteRealSet& t, Kind kind, const SplitConfig& config, std::size_t a_size,
                        DecompositionTrace& trace) {
  EngineResult res;
  res.C = t;
  const std::size_t limit = trace.round_limit;
  const double mv = std::max(1.0, m_value(config, a_size));
  const double lg = std::max(1.0, std::log2(static_cast<double>(a_size)));
  const Kind good_for = kind == Kind::multiplicative ? Kind::additive : Kind::multiplicative;
  while (!res.C.empty()) {
    auto w = find_witness(res.C, kind, config, a_size);
    if (!w) break;
    if (res.rounds.size() == limit) {
      trace.rounds = res.rounds;
      trace.B = res.B;
      trace.C = res.C;
      throw SplitAborted("decomposition: round guard " + std::to_string(limit) + " exceeded", trace);
    }
    RoundRecord rec;
    rec.C = res.C;
    rec.extraction = dyadic_extract(res.C, *w);
    const auto& d = rec.extraction.piece;
    rec.piece_size_ok =
        static_cast<double>(d.size()) * config.slack.C.get_d() * std::sqrt(mv) * lg * lg >= static_cast<double>(res.C.size());
    const Rational sz = size_q(w->S_tau.size()), gz = size_q(w->G.size());
    const Rational& q = rec.extraction.q;
    rec.cover_bound = sz * sz * gz * gz / (q * q * q * size_q(d.size()));
    rec.d_estimate = q_interval(d, CandidateFamily{{d}, {"self"}}, good_for).upper;
    rec.d_class = rec.d_estimate <= 1 ? 0 : ceil_log2(static_cast<std::uint64_t>(std::ceil(rec.d_estimate.get_d())));
    rec.witness = std::move(*w);
    res.B = set_union(res.B, d);
    res.C = set_difference(res.C, d);
    res.rounds.push_back(std::move(rec));
  }
  return res;
}

void fill_histogram(DecompositionTrace& trace) {
  trace.d_class_histogram.clear();
  for (const auto& r : trace.rounds) ++trace.d_class_histogram[r.d_class];
}

BoundRow bound_row(std::string name, BigInt value, std::size_t n, unsigned long p, const Slack& slack) {
  BoundRow row;
  row.name = std::move(name);
  row.bound = "|A|^(" + std::to_string(p) + "/5)";
  row.check = check_bound(Rational(value), slack.C, BigInt(static_cast<unsigned long>(std::max<std::size_t>(n, 1))),
                          p, 5, slack.c);
  row.value = std::move(value);
  return row;
}

void require_partition(const FiniteRealSet& a, const FiniteRealSet& b, const FiniteRealSet& c, const char* who) {
  if (!set_intersection(b, c).empty() || set_union(b, c) != a)
    throw InvalidInput(std::string(who) + ": B and C do not partition A");
}

}  // namespace

bool passes_stop_test(const Rational& score, const SplitConfig& config, std::size_t a_size) {
  if (config.M) {
    if (*config.M < 1) throw InvalidInput("SplitConfig: M must be >= 1");
    return score * *config.M > 1;
  }
  // score > |A|^{-2/5}  ⇔  score⁵·|A|² > 1
  const Rational n = size_q(a_size);
  return pow(score, 5) * n * n > 1;
}

std::optional<Witness> find_witness(const FiniteRealSet& cp, Kind kind, const SplitConfig& config, std::size_t a_size) {
  if (cp.empty()) throw InvalidInput("find_witness: empty set");
  if (kind == Kind::multiplicative && cp.contains_zero())
    throw InvalidInput("find_witness: multiplicative kind requires 0 not in C'");
  if (a_size == 0) a_size = cp.size();
  // Dilating G leaves a multiplicative score unchanged and translating G an
  // additive one, so those members duplicate "self".
  CandidateFamily family;
  {
    CandidateFamily all = candidate_family(cp, config.family);
    const std::string redundant = kind == Kind::multiplicative ? "dilate:" : "translate:";
    for (std::size_t i = 0; i < all.members.size(); ++i) {
      if (all.tags[i].rfind(redundant, 0) == 0) continue;
      family.members.push_back(std::move(all.members[i]));
      family.tags.push_back(std::move(all.tags[i]));
    }
  }
  const auto grid = tau_grid(config, a_size);
  const SetOp op = kind == Kind::multiplicative ? SetOp::quot : SetOp::diff;
  std::vector<FiniteRealSet> members(family.members.size());
  std::vector<MemberBest> best(family.members.size());
  const Rational c2 = size_q(cp.size()) * size_q(cp.size());

  parallel_for(family.members.size(), [&](std::size_t i) {
    members[i] = kind == Kind::multiplicative ? without_zero(family.members[i]) : family.members[i];
    const auto& g = members[i];
    if (g.empty()) return;
    const std::vector<std::uint64_t> counts = multiplicity_profile(cp, g, op);
    const Rational denom = c2 * size_q(g.size()) * size_q(g.size());
    for (const auto& tau : grid) {
      // counts sorted descending: |S_τ| is the length of the prefix >= τ
      const auto s = static_cast<std::size_t>(
          std::partition_point(counts.begin(), counts.end(), [&](std::uint64_t c) { return Rational(c) >= tau; }) -
          counts.begin());
      if (s == 0) continue;
      const Rational score = size_q(s) * tau * tau * tau / denom;
      if (score > best[i].score) best[i] = {score, tau};
    }
  });

  std::size_t arg = best.size();
  for (std::size_t i = 0; i < best.size(); ++i)
    if (sgn(best[i].score) > 0 && (arg == best.size() || best[i].score > best[arg].score)) arg = i;
  if (arg == best.size() || !passes_stop_test(best[arg].score, config, a_size)) return std::nullopt;

  Witness w;
  w.kind = kind;
  w.G = members[arg];
  w.G_tag = family.tags[arg];
  w.tau = best[arg].tau;
  w.S_tau = threshold_set(cp, w.G, w.tau, kind);
  w.score = best[arg].score;
  return w;
}

Extraction dyadic_extract(const FiniteRealSet& cp, const Witness& w) {
  std::map<int, std::vector<Rational>> classes;
  Extraction out;
  for (const auto& a : cp) {
    const BigInt c = piece_count(w.S_tau, w.G, a, w.kind);
    out.total += c;
    if (sgn(c) == 0) continue;
    classes[ceil_log2(c.get_ui())].push_back(a);
  }
  if (classes.empty()) throw InvalidInput("dyadic_extract: degenerate witness, every count is zero");
  out.nonempty_classes = classes.size();
  const std::vector<Rational>* pick = nullptr;
  Rational best_mass = -1;
  for (const auto& [cls, members] : classes) {
    // q = 2^{cls-1}
    const Rational q = cls == 0 ? Rational(1, 2) : Rational(BigInt(1) << (cls - 1));
    const Rational mass = size_q(members.size()) * q;
    // Ascending cls: replacing on equal mass only when strictly larger keeps smaller q.
    if (mass > best_mass || (mass == best_mass && members.size() > pick->size())) {
      best_mass = mass;
      pick = &members;
      out.cls = cls;
      out.q = q;
    }
  }
  out.piece = make_sorted_set(*pick);
  return out;
}

bool SplitCertificate::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.check.verdict == Verdict::holds; });
}

SplitCertificate certify_split(const FiniteRealSet& a, const FiniteRealSet& b, const FiniteRealSet& c,
                               const Slack& slack) {
  require_partition(a, b, c, "certify_split");
  if (c.contains_zero()) throw InvalidInput("certify_split: multiplicative part must avoid 0");
  const std::size_t n = a.size();
  SplitCertificate cert;
  cert.rows.push_back(bound_row("E2+(B)", energy2(b, b, Kind::additive).value, n, 14, slack));
  cert.rows.push_back(bound_row("E2x(C)", energy2(c, c, Kind::multiplicative).value, n, 14, slack));
  cert.rows.push_back(bound_row("E2+(A,B)", energy2(a, b, Kind::additive).value, n, 14, slack));
  cert.rows.push_back(bound_row("E2x(A,C)", energy2(a, c, Kind::multiplicative).value, n, 14, slack));
  cert.rows.push_back(bound_row("E3+(B)", b.empty() ? BigInt(0) : energy_k(b, 3, Kind::additive).value, n, 18, slack));
  cert.rows.push_back(
      bound_row("E3x(C)", c.empty() ? BigInt(0) : energy_k(c, 3, Kind::multiplicative).value, n, 18, slack));
  if (!b.empty()) cert.q_B = q_interval(b, candidate_family(b), Kind::additive);
  if (!c.empty()) cert.q_C = q_interval(c, candidate_family(c), Kind::multiplicative);
  return cert;
}

DecompositionTrace balog_wooley_split(const FiniteRealSet& a, const SplitConfig& config) {
  if (a.size() < 2) throw InvalidInput("balog_wooley_split: |A| must be >= 2");
  if (a.contains_zero()) throw InvalidInput("balog_wooley_split: requires 0 not in A");
  DecompositionTrace trace;
  trace.frame = "A";
  trace.witness_kind = Kind::multiplicative;
  trace.M = m_decimal(config, a.size());
  trace.round_limit = round_limit(config, a.size());
  EngineResult res = run_engine(a, Kind::multiplicative, config, a.size(), trace);
  trace.rounds = std::move(res.rounds);
  trace.B = std::move(res.B);
  trace.C = std::move(res.C);
  fill_histogram(trace);
  trace.certificate = certify_split(a, trace.B, trace.C, config.slack);
  return trace;
}

const char* to_string(ShiftMode m) { return m == ShiftMode::mult_shift ? "mult_shift" : "add_scale"; }

SplitCertificate certify_shifted(const FiniteRealSet& a, const FiniteRealSet& b, const FiniteRealSet& c,
                                 const Rational& alpha, ShiftMode mode, const Slack& slack) {
  if (sgn(alpha) == 0) throw InvalidInput("certify_shifted: alpha must be nonzero");
  require_partition(a, b, c, "certify_shifted");
  const std::size_t n = a.size();
  SplitCertificate cert;
  if (mode == ShiftMode::mult_shift) {
    cert.rows.push_back(bound_row("E2x(B)", energy2(b, b, Kind::multiplicative).value, n, 14, slack));
    const FiniteRealSet shifted = translate(c, alpha);
    cert.rows.push_back(bound_row("E2x(C+alpha)", energy2(shifted, shifted, Kind::multiplicative).value, n, 14, slack));
  } else {
    if (c.contains_zero()) throw InvalidInput("certify_shifted: add_scale part C' must avoid 0");
    cert.rows.push_back(bound_row("E2+(B')", energy2(b, b, Kind::additive).value, n, 14, slack));
    const FiniteRealSet scaled = divide_into(c, alpha);
    cert.rows.push_back(bound_row("E2+(alpha/C')", energy2(scaled, scaled, Kind::additive).value, n, 14, slack));
  }
  return cert;
}

DecompositionTrace shifted_split(const FiniteRealSet& a, const Rational& alpha, ShiftMode mode,
                                 const SplitConfig& config) {
  if (sgn(alpha) == 0) throw InvalidInput("shifted_split: alpha must be nonzero");
  if (a.empty()) throw InvalidInput("shifted_split: empty set");
  DecompositionTrace trace;
  trace.M = m_decimal(config, a.size());
  trace.round_limit = round_limit(config, a.size());
  const Rational pole = mode == ShiftMode::mult_shift ? Rational(-alpha) : Rational(0);
  if (a.contains(pole)) trace.forced = FiniteRealSet{pole};
  const FiniteRealSet rest = set_difference(a, trace.forced);

  if (mode == ShiftMode::mult_shift) {
    trace.frame = "A+" + to_string(alpha);
    trace.witness_kind = Kind::multiplicative;
    EngineResult res = run_engine(translate(rest, alpha), Kind::multiplicative, config, a.size(), trace);
    trace.rounds = std::move(res.rounds);
    trace.B = set_union(translate(res.B, -alpha), trace.forced);
    trace.C = translate(res.C, -alpha);
  } else {
    trace.frame = to_string(alpha) + "/A";
    trace.witness_kind = Kind::additive;
    EngineResult res = run_engine(divide_into(rest, alpha), Kind::additive, config, a.size(), trace);
    trace.rounds = std::move(res.rounds);
    trace.B = set_union(divide_into(res.B, alpha), trace.forced);
    trace.C = divide_into(res.C, alpha);
  }
  fill_histogram(trace);
  trace.certificate = certify_shifted(a, trace.B, trace.C, alpha, mode, config.slack);
  return trace;
}

RatioSplit ratio_split(const FiniteRealSet& a, const SplitConfig& config) {
  if (a.size() < 3) throw InvalidInput("ratio_split: |A| must be >= 3");
  RatioSplit out;
  out.R = ratio_set(a);
  if (out.R.size() < 2) throw InvalidInput("ratio_split: R[A] too small");
  const FiniteRealSet& r = out.R;

  // R = 1 − R, so C − 1 = −(1 − C) has the multiplicative energy of 1 − C ⊆ R.
  out.mult = shifted_split(r, -1, ShiftMode::mult_shift, config);
  out.R1 = 2 * out.mult.B.size() >= r.size() ? out.mult.B : reflect(out.mult.C, 1);

  // (R*)⁻¹ = R*, so 1/C′ ⊆ R.
  out.add = shifted_split(r, 1, ShiftMode::add_scale, config);
  const FiniteRealSet inv = divide_into(out.add.C, 1);
  out.R2 = out.add.B.size() >= inv.size() ? out.add.B : inv;

  out.reflection_ok = reflect(r, 1) == r;
  const FiniteRealSet rstar = without_zero(r);
  out.inversion_ok = divide_into(rstar, 1) == rstar;
  out.sizes_ok = 2 * out.R1.size() >= r.size() && 2 * out.R2.size() >= r.size() && is_subset(out.R1, r) &&
                 is_subset(out.R2, r);
  out.e_R1 = bound_row("E2x(R')", energy2(out.R1, out.R1, Kind::multiplicative).value, out.R1.size(), 14, config.slack);
  out.e_R1.bound = "|R'|^(14/5)";
  out.e_R2 = bound_row("E2+(R'')", energy2(out.R2, out.R2, Kind::additive).value, out.R2.size(), 14, config.slack);
  out.e_R2.bound = "|R''|^(14/5)";
  return out;
}

}  // namespace addcomb
