#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "addcomb/finite_set.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

/// Exact representation function x ↦ #{(a, b) ∈ A×B : a o b = x}, sorted by x.
struct RepFunction {
  std::vector<std::pair<Rational, BigInt>> counts;
  BigInt total = 0;

  BigInt at(const Rational& x) const;
  std::size_t support_size() const noexcept { return counts.size(); }
};

RepFunction rep_function(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op);
/// The counts of rep_function(a, b, op) alone, sorted decreasing.
std::vector<std::uint64_t> multiplicity_profile(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op);

struct EnergyValue {
  BigInt value = 0;
  Kind kind = Kind::additive;
  unsigned order = 2;
};

/// E⁺(A,B) = #{a1+b1 = a2+b2}, E×(A,B) = #{a1·b1 = a2·b2} (zeros allowed).
EnergyValue energy2(const FiniteRealSet& a, const FiniteRealSet& b, Kind kind);

/// E_k(A,B) = Σ_x (A∘B)(x)^k with (A∘B) the difference (resp. ratio)
/// representation. The multiplicative kind requires 0 ∉ A, B.
EnergyValue energy_k_pair(const FiniteRealSet& a, const FiniteRealSet& b, unsigned k, Kind kind);

/// E_k(A) = E_k(A, A).
EnergyValue energy_k(const FiniteRealSet& a, unsigned k, Kind kind);

/// Multi-set form E_k(A_1,…,A_k) = Σ_x Π_i (A_i∘A_i)(x), k = sets.size() >= 2.
EnergyValue energy_k(std::span<const FiniteRealSet> sets, Kind kind);

/// σ_k(A) = #{(a_1,…,a_k) ∈ A^k : a_1+…+a_k = 0}.
BigInt sigma_k(const FiniteRealSet& a, unsigned k);

/// S_τ(A,B) = {s ∈ A−B : |A∩(B+s)| ≥ τ} (additive) or
/// {s ∈ A/B : |A∩sB| ≥ τ} (multiplicative, 0 ∉ B). Requires τ >= 1.
FiniteRealSet threshold_set(const FiniteRealSet& a, const FiniteRealSet& b, const Rational& tau, Kind kind);

/// Sym⁺_t(Q,R) = {x : |Q∩(x−R)| ≥ t}; Sym×_t(Q,R) = {x : |Q∩xR⁻¹| ≥ t}
/// (0 ∉ R). Requires t > 0.
FiniteRealSet sym_set(const FiniteRealSet& q, const FiniteRealSet& r, const Rational& t, Kind kind);

}  // namespace addcomb
