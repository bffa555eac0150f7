#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/bigfloat.hpp"
#include "addcomb/group.hpp"

namespace addcomb {

/// raw = ‖f‖^{2k} (plain E_k, l = 2) or ‖f‖^{kl}; root = raw^{1/(kl)} as a
/// 64-digit decimal, rounded to nearest.
struct NormReport {
  unsigned k = 2;
  unsigned l = 2;
  Rational raw = 0;
  std::string root;
};

/// E_k(f) = Σ_x (f̄∘f)(x)^k, exact. Real and nonnegative for every k ≥ 1,
/// complex f included.
Rational ek_raw(const GroupFunction& f, unsigned k);
/// Σ_{x ∈ Γ^{k−1}} |C_k(f)(x)|², exact; guarded by max_table (N^k work).
Rational ek_raw_ck(const GroupFunction& f, unsigned k);
/// N^{−(k−1)} Σ_{x_1+⋯+x_k=0} Π |f̂(x_i)|², floating point.
long double ek_raw_fourier(const GroupFunction& f, unsigned k);
/// The same Fourier form evaluated exactly through the Walsh transform (𝔽₂ⁿ only).
Rational ek_raw_walsh(const GroupFunction& f, unsigned k);

NormReport ek_norm(const GroupFunction& f, unsigned k);

enum class EklOrder { over_k, over_l };
/// over_k: Σ_{x∈Γ^{k−1}} C_k(f)(x)^l;  over_l: Σ_{y∈Γ^{l−1}} C_l(f)(y)^k.
/// Real f; k, l >= 2 with k or l even.
Rational ekl_raw(const GroupFunction& f, unsigned k, unsigned l, EklOrder order);
/// Evaluated through the cheaper order (fewer free shifts).
NormReport ekl_norm(const GroupFunction& f, unsigned k, unsigned l);

struct TriangleResult {
  Verdict verdict = Verdict::tight;
  Rational lhs_raw;                  // ‖f+g‖^{kl}
  std::string rhs_f_root, rhs_g_root;  // ‖|f|‖, ‖|g|‖ as decimals
};

/// ‖f+g‖ <= ‖|f|‖ + ‖|g|‖ for E_k (l = 2) or E_{k,l}. Complex f, g are
/// accepted for l = 2; their moduli enter through MPFR enclosures.
TriangleResult triangle_check(const GroupFunction& f, const GroupFunction& g, unsigned k, unsigned l = 2);

struct HolderResult {
  Verdict verdict = Verdict::tight;
  Rational sigma;        // Σ_x Π_j (f_j∘f'_j)(x)
  Rational rhs_product;  // Π_j E_k(|f_j|) E_k(|f'_j|),  compared with σ^{2k}
};

/// |Σ_x Π_{j≤k} (f_j∘f'_j)(x)| <= Π_j ‖|f_j|‖_{E_k} ‖|f'_j|‖_{E_k}, k = pairs.size(),
/// decided exactly as σ^{2k} <= Π E_k(|f_j|)E_k(|f'_j|). Real functions.
HolderResult holder_ck_check(const std::vector<std::pair<GroupFunction, GroupFunction>>& pairs);

enum class ZeroNorm { f_is_zero, f_nonzero_with_positive_norm };

struct ZeroNormResult {
  ZeroNorm status = ZeroNorm::f_is_zero;
  Rational raw;
  Rational l2_bound;  // (Σ f²)^k, the x = 0 term
  /// raw = 0 ⟺ f ≡ 0, and raw >= l2_bound.
  bool consistent = false;
};

/// Even k >= 2, real f.
ZeroNormResult zero_norm_check(const GroupFunction& f, unsigned k);

/// Enclosure [lo, hi] of E_k(|f|) for complex f.
std::pair<BigFloat, BigFloat> abs_raw_enclosure(const GroupFunction& f, unsigned k, mpfr_prec_t prec = 256);

/// The character x ↦ (−1)^{λ·x} on 𝔽₂ⁿ.
GroupFunction cube_character(const FiniteAbelianGroup& g, std::size_t lambda);

}  // namespace addcomb
