#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addcomb/bigfloat.hpp"
#include "addcomb/finite_set.hpp"

namespace addcomb {

/// The first t odd primes 3, 5, 7, …; the sieve bound grows by doubling
/// from a prime-counting estimate and is capped by limits().max_sieve.
std::vector<std::uint64_t> first_odd_primes(std::size_t t);

struct PGConstruction {
  std::size_t N = 0, K = 0, t = 0;
  std::vector<std::uint64_t> P;
  FiniteRealSet G;  // {2^1, …, 2^K}
  FiniteRealSet A;  // P·G, |A| = tK
  /// B ∩ (P·2^j) for j = 1..K.
  std::vector<FiniteRealSet> fibers(const FiniteRealSet& b) const;
};

/// K = ⌈N^{1/4}⌉ unless overridden, t = ⌈N/K⌉. Requires N >= 4.
PGConstruction pg_set(std::size_t n, std::optional<std::size_t> k_override = std::nullopt);

struct DoublingAudit {
  /// |A²·Δ(A)| = Σ_{x ∈ A/A} |A·A_x|
  BigInt value;
  /// |AA|, a lower bound for value.
  BigInt product_set_size;
  /// value <= C·(N² + N³/K)·log₂²N
  BoundCheck check;
};

DoublingAudit mult_doubling_audit(const PGConstruction& c, const Rational& constant = 50);

enum class Sampler { full, random_half, adversarial_half };
const char* to_string(Sampler s);
Sampler parse_sampler(const std::string& name);

/// B ⊆ A of size ⌈|A|/2⌉ (or A itself for full). adversarial_half drops
/// the elements with the largest Σ_b r⁺(a−b)² + r×(a/b)², ties toward
/// larger values.
FiniteRealSet sample_subset(const FiniteRealSet& a, Sampler s, std::uint64_t seed);

struct ScanRow {
  std::size_t N = 0, size_A = 0, size_B = 0, K = 0;
  BigInt e3_add, e3_mult;
  /// |A²·Δ(A)|
  BigInt mult_doubling;
  BigInt fiber_sum_e3;  // Σ_j E₃⁺(B_j)
  bool fiber_ok = false;  // E₃⁺(B) >= Σ_j E₃⁺(B_j)
  /// |B²·Δ(B)|
  BigInt b_doubling;
  /// |B|⁶ <= E₃×(B)|B²·Δ(B)| <= E₃×(B)|A²·Δ(A)|
  bool e3_cs_ok = false;
};

struct ScanResult {
  Sampler sampler = Sampler::full;
  std::uint64_t seed = 0;
  std::vector<ScanRow> rows;
  /// Least-squares slopes of log₂E₃ against log₂|A|.
  double slope_add = 0, slope_mult = 0;
};

/// Requires Ns strictly increasing with at least two entries.
ScanResult exponent_scan(const std::vector<std::size_t>& ns, Sampler sampler, std::uint64_t seed = 0);

/// Ordinary least squares slope; requires >= 2 points with distinct x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

struct MultinomialResult {
  bool holds = true;
  /// First n where the two sides differ.
  std::optional<std::size_t> failing_n;
  /// lhs[n] = Σ k!/Π n_ε! over {Σ n_ε = k, Σ wt(ε)n_ε = n}; rhs[n] = C(lk, n).
  std::vector<BigInt> lhs, rhs;
};

/// Checks every n in 0..lk. Requires 1 <= l <= 5 and 1 <= k <= 7.
MultinomialResult multinomial_identity(unsigned l, unsigned k);

}  // namespace addcomb
