#pragma once

#include <span>
#include <utility>
#include <vector>

#include "addcomb/finite_set.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

/// Finitely supported integer-valued function on ℚ; entries sorted by
/// point, zero values never stored.
struct SparseFunction {
  std::vector<std::pair<Rational, BigInt>> values;

  SparseFunction() = default;
  /// Sorts, merges duplicates by addition, drops zeros.
  explicit SparseFunction(std::vector<std::pair<Rational, BigInt>> entries);

  BigInt at(const Rational& x) const;
  std::size_t support_size() const noexcept { return values.size(); }
};

SparseFunction indicator(const FiniteRealSet& a);

/// One nonzero entry C_k(f_1,…,f_k)(x_1,…,x_{k−1}).
struct ConvolutionPoint {
  std::vector<Rational> shifts;
  BigInt value;
};

/// Sparse table of C_k(f_1,…,f_k)(x) = Σ_z f_1(z) f_2(z+x_1) ⋯ f_k(z+x_{k−1}),
/// lexicographically sorted by shift tuple. A single function is repeated
/// k times. Requires k >= 2.
std::vector<ConvolutionPoint> conv_table(std::span<const SparseFunction> functions, unsigned k);

enum class CommutativityMode { scalar, multi_scalar, sigma };

/// Evaluates both sides of one commutativity identity for C_l:
///   scalar:       f, g of length l;
///                 Σ_x C_l(f)(x) C_l(g)(x) = Σ_z Π_j (f_j∘g_j)(z)
///   multi_scalar: f of length k, g empty;
///                 Σ_x Π_i C_l(f_i)(x) = Σ_y C_k(f_0,…,f_{k−1})(y)^l
///   sigma:        f of length k, g empty;
///                 Σ_x C_l(f_0)(x) (C_l(f_1)∘⋯∘C_l(f_{k−1}))(x) = Σ_z (f_0∘⋯∘f_{k−1})(z)^l
/// where (h_0∘⋯∘h_{m−1})(s) = Σ_u h_0(u_0)⋯h_{m−2}(u_{m−2}) h_{m−1}(u_0+⋯+u_{m−2}+s).
/// Returns (lhs, rhs); both are evaluated independently.
std::pair<BigInt, BigInt> commutativity_check(std::span<const SparseFunction> f, std::span<const SparseFunction> g,
                                              unsigned l, CommutativityMode mode);

}  // namespace addcomb
