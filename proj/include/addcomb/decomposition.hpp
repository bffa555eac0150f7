#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/bigfloat.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/estimates.hpp"
#include "addcomb/finite_set.hpp"

namespace addcomb {

struct SplitConfig {
  /// Stop-test parameter; nullopt means |A|^{2/5}, compared exactly.
  std::optional<Rational> M;
  /// Thresholds τ; empty means {1, 2, 4, …} up to |A|.
  std::vector<Rational> tau_grid;
  FamilyConfig family;
  /// Round guard ⌈round_constant·√M·log₂|A|⌉ when max_rounds is 0.
  Rational round_constant = 8;
  std::size_t max_rounds = 0;
  /// Slack of the certification bounds.
  Slack slack{100, 3};
};

struct Witness {
  Kind kind = Kind::multiplicative;
  FiniteRealSet G;
  std::string G_tag;
  Rational tau = 1;
  FiniteRealSet S_tau;
  /// |S_τ|τ³/(|C′|²|G|²)
  Rational score = 0;
};

/// score > 1/M, with M = |A|^{2/5} when unset (decided as score⁵|A|² > 1).
bool passes_stop_test(const Rational& score, const SplitConfig& config, std::size_t a_size);

/// Best witness over the family of Cp for the given orientation: the
/// multiplicative kind thresholds |C′ ∩ sG| over s ∈ C′/G, the additive kind
/// |C′ ∩ (G + s)| over s ∈ C′ − G. Empty when no score passes the stop test.
/// a_size is the |A| entering M (0 means |Cp|).
std::optional<Witness> find_witness(const FiniteRealSet& cp, Kind kind, const SplitConfig& config,
                                    std::size_t a_size = 0);

struct Extraction {
  FiniteRealSet piece;
  /// Every a in piece has count in (q, 2q]; q = 2^{cls−1}.
  Rational q;
  int cls = 0;
  std::size_t nonempty_classes = 0;
  /// Σ_a count(a), which is at least τ|S_τ|.
  BigInt total = 0;
};

/// Dyadic pigeonhole over count(a) = |S_τ ∩ aG⁻¹| (resp. |S_τ ∩ (a − G)|).
/// Picks the class maximizing |A′|·q, ties toward larger |A′| then smaller q.
Extraction dyadic_extract(const FiniteRealSet& cp, const Witness& w);

struct RoundRecord {
  FiniteRealSet C;
  Witness witness;
  Extraction extraction;
  /// |D_j|·C·√M·log₂²|A| ≥ |C_j| with C the configured slack constant.
  bool piece_size_ok = false;
  /// |S_τ|²|G|²/(q³|D_j|), the cover bound the witness certifies for d(D_j).
  Rational cover_bound;
  /// q_upper(D_j) in the orientation the piece is good for; D ≤ q_upper.
  Rational d_estimate;
  /// ⌈log₂ d_estimate⌉
  int d_class = 0;
};

struct BoundRow {
  std::string name;
  BigInt value;
  std::string bound;  // e.g. "|A|^(18/5)"
  BoundCheck check;
};

struct SplitCertificate {
  std::vector<BoundRow> rows;
  std::optional<CertifiedInterval> q_B, q_C;
  bool all_hold() const;
};

struct DecompositionTrace {
  /// Coordinates the rounds live in: "A", "A+α" or "α/A".
  std::string frame;
  Kind witness_kind = Kind::multiplicative;
  std::string M;  // decimal of the M in use
  std::size_t round_limit = 0;
  std::vector<RoundRecord> rounds;
  /// Partition of the input set, in its own coordinates.
  FiniteRealSet B, C;
  /// Elements placed in B without a round (the pole of a shifted frame).
  FiniteRealSet forced;
  std::map<int, std::size_t> d_class_histogram;
  SplitCertificate certificate;
};

/// ResourceLimit that carries the trace up to the failing round.
class SplitAborted : public ResourceLimit {
 public:
  SplitAborted(const std::string& what, DecompositionTrace partial)
      : ResourceLimit(what), partial_(std::move(partial)) {}
  const DecompositionTrace& partial() const noexcept { return partial_; }

 private:
  DecompositionTrace partial_;
};

/// A = B ⊔ C built by repeatedly removing the dyadic piece of a
/// multiplicative witness from C. Requires |A| ≥ 2 and 0 ∉ A.
DecompositionTrace balog_wooley_split(const FiniteRealSet& a, const SplitConfig& config = {});

/// E₂⁺(B), E₂×(C), E₂⁺(A,B), E₂×(A,C) against |A|^{14/5} and E₃⁺(B),
/// E₃×(C) against |A|^{18/5}, each times C·log₂^c|A|; q-intervals of B
/// (additive) and C (multiplicative) when nonempty.
SplitCertificate certify_split(const FiniteRealSet& a, const FiniteRealSet& b, const FiniteRealSet& c,
                               const Slack& slack = {100, 3});

enum class ShiftMode { mult_shift, add_scale };
const char* to_string(ShiftMode m);

/// mult_shift: splits A + α with multiplicative witnesses, −α goes to B;
/// certifies E×(B), E×(C+α). add_scale: splits α/A with additive
/// witnesses (0 goes to B′); certifies E⁺(B′), E⁺(α/C′). Both against
/// |A|^{14/5} with the configured slack. Requires α ≠ 0.
DecompositionTrace shifted_split(const FiniteRealSet& a, const Rational& alpha, ShiftMode mode,
                                 const SplitConfig& config = {});

SplitCertificate certify_shifted(const FiniteRealSet& a, const FiniteRealSet& b, const FiniteRealSet& c,
                                 const Rational& alpha, ShiftMode mode, const Slack& slack = {100, 3});

struct RatioSplit {
  FiniteRealSet R, R1, R2;  // R1 = R′ (multiplicatively good), R2 = R″ (additively good)
  DecompositionTrace mult, add;
  bool reflection_ok = false;  // R = 1 − R
  bool inversion_ok = false;   // (R*)⁻¹ = R*
  bool sizes_ok = false;       // |R′|, |R″| ≥ |R|/2
  BoundRow e_R1, e_R2;         // E×(R′), E⁺(R″) against |R′|^{14/5}, |R″|^{14/5}
};

/// Requires |A| ≥ 3.
RatioSplit ratio_split(const FiniteRealSet& a, const SplitConfig& config = {});

}  // namespace addcomb
