#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

/// ℤ_n (elements 0..n−1) or 𝔽₂ⁿ (bit vectors packed into an index).
class FiniteAbelianGroup {
 public:
  enum class Type { cyclic, cube };

  static FiniteAbelianGroup cyclic(std::size_t n);
  static FiniteAbelianGroup cube(unsigned n);

  Type type() const noexcept { return type_; }
  /// n for ℤ_n, dimension for 𝔽₂ⁿ.
  std::size_t parameter() const noexcept { return param_; }
  std::size_t order() const noexcept { return order_; }

  std::size_t add(std::size_t a, std::size_t b) const { return type_ == Type::cube ? a ^ b : (a + b) % order_; }
  std::size_t neg(std::size_t a) const { return type_ == Type::cube || a == 0 ? a : order_ - a; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }

  std::string describe() const;
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  FiniteAbelianGroup(Type t, std::size_t param, std::size_t order) : type_(t), param_(param), order_(order) {}
  Type type_;
  std::size_t param_;
  std::size_t order_;
};

struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational pow(const GaussianRational& z, unsigned k);

/// Dense exact function Γ → ℚ(i).
struct GroupFunction {
  FiniteAbelianGroup group;
  std::vector<GaussianRational> values;

  explicit GroupFunction(FiniteAbelianGroup g);
  GroupFunction(FiniteAbelianGroup g, std::vector<GaussianRational> v);
  /// Real-valued from rationals.
  static GroupFunction real(FiniteAbelianGroup g, const std::vector<Rational>& v);
  /// Indicator of the listed elements.
  static GroupFunction indicator(FiniteAbelianGroup g, const std::vector<std::size_t>& support);

  std::size_t size() const noexcept { return values.size(); }
  bool is_real() const;
  bool is_zero() const;
  /// Pointwise |f| when f is real; requires is_real().
  GroupFunction abs_real() const;
};

GroupFunction operator+(const GroupFunction& f, const GroupFunction& g);

/// (f ∘ g)(x) = Σ_y f(y) g(y+x)   (no conjugation).
GroupFunction correlate(const GroupFunction& f, const GroupFunction& g);
/// (f * g)(x) = Σ_y f(y) g(x−y).
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);
/// x ↦ conj f(x).
GroupFunction conjugate(const GroupFunction& f);

using Spectrum = std::vector<std::complex<long double>>;

/// f̂(ξ) = Σ_x f(x) e(−ξ·x), dual indexed like the group.
Spectrum dft(const GroupFunction& f);
/// f(x) = N⁻¹ Σ_ξ f̂(ξ) e(ξ·x).
Spectrum inverse_dft(const FiniteAbelianGroup& g, const Spectrum& fhat);
/// Exact Walsh transform on 𝔽₂ⁿ, where characters are ±1.
std::vector<GaussianRational> walsh(const GroupFunction& f);

/// Relative errors of the basic Fourier identities.
struct FourierCheck {
  long double parseval = 0;           // Σ|f|² vs N⁻¹Σ|f̂|²
  long double convolution_l2 = 0;     // Σ_y|(f*g)(y)|² vs N⁻¹Σ|f̂|²|ĝ|²
  long double inversion = 0;          // max |f − F⁻¹F f| / max|f|
  long double conv_theorem = 0;       // F(f*g) vs f̂ĝ
  long double corr_theorem = 0;       // F(f∘g) vs conj(F(f̄)) ĝ
  long double worst() const;
};
FourierCheck fourier_identities(const GroupFunction& f, const GroupFunction& g);

/// `group cyclic n` / `group cube n`, then N lines `re im`.
GroupFunction read_group_function(std::istream& in);
void write_group_function(std::ostream& out, const GroupFunction& f);

}  // namespace addcomb
