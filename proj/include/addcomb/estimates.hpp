#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addcomb/finite_set.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

/// C·log₂^c|A|, the instantiation of every unspecified ≲.
struct Slack {
  Rational C = 4;
  unsigned c = 2;
};

struct FamilyConfig {
  std::size_t translates = 4;  // A − a and A / a for evenly spaced a ∈ A
  std::size_t popular = 64;    // top-m elements of A−A and of A/A
  bool dyadic_blocks = true;   // contiguous blocks of length |A|/2, |A|/4, … ≥ 2
  bool random_subsets = true;  // sizes ⌈|A|/4⌉ and ⌈|A|/2⌉
  std::uint64_t seed = 0;
};

/// Candidate sets B standing in for "all finite B". members[0] is A.
struct CandidateFamily {
  std::vector<FiniteRealSet> members;
  std::vector<std::string> tags;
};

CandidateFamily candidate_family(const FiniteRealSet& a, const FamilyConfig& config = {});

enum class UpperSource { cauchy_schwarz_E3, trivial_cardinality };
const char* to_string(UpperSource s);

struct CertifiedInterval {
  std::string quantity;  // "q" or "D"
  Kind kind = Kind::additive;
  Rational lower = 1;
  Rational upper = 1;
  std::string lower_witness;
  UpperSource upper_source = UpperSource::trivial_cardinality;
  /// The lower endpoint relies on an unspecified constant.
  bool heuristic_lower = false;
};

/// lower = max over family ∪ {A} of E₃(A,B)/(|A||B|²); zero elements are
/// dropped from members for the multiplicative kind. upper =
/// min(|A|, ⌈√E₃(A)⌉/|A|).
CertifiedInterval q_interval(const FiniteRealSet& a, const CandidateFamily& family, Kind kind);

/// D ≤ q_upper; lower = max(1, q_lower / slack), flagged heuristic.
/// Default slack is log₂²|A| (C = 1, c = 2).
CertifiedInterval d_sandwich(const FiniteRealSet& a, const CandidateFamily& family, Kind kind,
                             const Slack& slack = {1, 2});

/// A ⊆ Sym_t(Q,R) with max(|Q|,|R|) ≥ |A| and 0 ∉ Q, R. The additive kind
/// uses Sym⁺ (bounds d×), the multiplicative kind Sym× (bounds d⁺).
struct SymCoverWitness {
  FiniteRealSet Q, R;
  Rational t = 1;
  Kind kind = Kind::additive;
};

/// |Q|²|R|²/(|A|t³) after verifying the witness. Throws InvalidInput when
/// the cover or a side condition fails.
Rational d_cover_upper(const FiniteRealSet& a, const SymCoverWitness& w);

/// Covers valid for every A (0 ∉ A for the multiplicative kind):
/// a singleton R with t = 1 (value |A|) and R = c − A (c/A) with
/// Q = A + A − c (AA/c), t = |A| (value |A∘A|²/|A|²).
std::vector<SymCoverWitness> universal_witnesses(const FiniteRealSet& a, Kind kind);

struct DStar {
  Rational value;
  std::string witness;
};

/// Additive kind: d⁺*(A) over the family, ratio |AB|²/(|A||B|);
/// multiplicative kind: d×*(A) with |A+B|. Singleton B = {1} is always
/// included. An upper bound for the true minimum.
DStar d_star(const FiniteRealSet& a, const CandidateFamily& family, Kind kind);

struct GenSigmaReport {
  Kind kind = Kind::additive;
  Rational q_upper;
  BigInt e2, e3;
  /// E₂(A₁,A₂)/(q_upper^{1/2}|A₁||A₂|^{3/2})
  double e2_ratio = 0;
  /// E₃(A₁,A₂)/(q_upper|A₁||A₂|²·max(1, log₂ min(|A₁|,|A₂|)))
  double e3_ratio = 0;
  /// E₃(A₁,A₂)/(|A₁||A₂|²) ≤ q_upper(A₁), exact.
  bool certified = false;
};

GenSigmaReport gen_sigma_check(const FiniteRealSet& a1, const FiniteRealSet& a2, Kind kind);

struct DDReport {
  DStar d_plus, d_times;
  Rational size;
  /// |A| ≤ C·log₂^c|A|·d̂⁺*·d̂×*, decided with the polylog rounded down.
  bool holds = false;
  std::string bound_decimal;
};

DDReport dd_check(const FiniteRealSet& a, const CandidateFamily& family, const Slack& slack = {});

}  // namespace addcomb
