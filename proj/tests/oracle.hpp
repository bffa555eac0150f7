#pragma once

// Brute-force reference implementations for the unit tests. Everything here
// is the literal definition evaluated by enumeration, with no shared code
// paths into the library beyond FiniteRealSet and Rational.

#include <cstdint>
#include <map>
#include <vector>

#include "addcomb/finite_set.hpp"
#include "addcomb/group.hpp"

namespace oracle {

using addcomb::BigInt;
using addcomb::FiniteRealSet;
using addcomb::Rational;
using addcomb::SetOp;

Rational apply(const Rational& a, const Rational& b, SetOp op);
FiniteRealSet combine(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op);
std::map<Rational, long> rep(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op);
/// #{(a1,b1,a2,b2) : a1 o b1 = a2 o b2}
long energy(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op);
/// Σ_x (A∘B)(x)^k with the difference (sum op) or ratio (prod op) representation.
BigInt energy_k(const FiniteRealSet& a, const FiniteRealSet& b, unsigned k, SetOp op);
long sigma_k(const FiniteRealSet& a, unsigned k);
std::size_t higher(const FiniteRealSet& a, SetOp op);
FiniteRealSet ratio_set(const FiniteRealSet& a);
/// {s : #{(a,b) : a = b + s (resp. a = s b)} >= tau}
FiniteRealSet threshold(const FiniteRealSet& a, const FiniteRealSet& b, long tau, bool multiplicative);
/// {x : |Q ∩ (x − R)| >= t} resp. {x : |Q ∩ xR⁻¹| >= t}, t >= 1
FiniteRealSet sym(const FiniteRealSet& q, const FiniteRealSet& r, long t, bool multiplicative);

/// C_k(f_1..f_k)(x) by choosing z and every shifted argument.
std::map<std::vector<Rational>, BigInt> conv_table(const std::vector<std::map<Rational, BigInt>>& f);

/// (f∘g)(x) = Σ_y f(y) g(y+x), plain loops.
addcomb::GroupFunction correlate(const addcomb::GroupFunction& f, const addcomb::GroupFunction& g);
/// Σ_{x ∈ Γ^{k−1}} C_k(f)(x)^l straight from the definition.
Rational ekl(const addcomb::GroupFunction& f, unsigned k, unsigned l);

/// First t odd primes by trial division.
std::vector<std::uint64_t> odd_primes(std::size_t t);
/// #{(ε_1..ε_k) ∈ ({0,1}^l)^k : Σ wt(ε_i) = n}
BigInt weight_tuples(unsigned l, unsigned k, unsigned n);

}  // namespace oracle
