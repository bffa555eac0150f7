#include "oracle.hpp"

#include <bit>
#include <set>

namespace oracle {

Rational apply(const Rational& a, const Rational& b, SetOp op) {
  switch (op) {
    case SetOp::sum: return a + b;
    case SetOp::diff: return a - b;
    case SetOp::prod: return a * b;
    case SetOp::quot: return a / b;
  }
  return 0;
}

FiniteRealSet combine(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  std::vector<Rational> out;
  for (const auto& x : a)
    for (const auto& y : b)
      if (op != SetOp::quot || y != 0) out.push_back(apply(x, y, op));
  return FiniteRealSet(out);
}

std::map<Rational, long> rep(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  std::map<Rational, long> r;
  for (const auto& x : a)
    for (const auto& y : b)
      if (op != SetOp::quot || y != 0) ++r[apply(x, y, op)];
  return r;
}

long energy(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  long n = 0;
  for (const auto& a1 : a)
    for (const auto& b1 : b)
      for (const auto& a2 : a)
        for (const auto& b2 : b)
          if (apply(a1, b1, op) == apply(a2, b2, op)) ++n;
  return n;
}

BigInt energy_k(const FiniteRealSet& a, const FiniteRealSet& b, unsigned k, SetOp op) {
  const SetOp inverse = op == SetOp::sum ? SetOp::diff : SetOp::quot;
  BigInt e = 0;
  for (const auto& [x, c] : rep(a, b, inverse)) {
    BigInt p = 1;
    for (unsigned i = 0; i < k; ++i) p *= c;
    e += p;
  }
  return e;
}

long sigma_k(const FiniteRealSet& a, unsigned k) {
  long n = 0;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Rational s = 0;
    for (auto i : idx) s += a[i];
    if (s == 0) ++n;
    std::size_t j = 0;
    while (j < k && ++idx[j] == a.size()) idx[j++] = 0;
    if (j == k) break;
  }
  return n;
}

std::size_t higher(const FiniteRealSet& a, SetOp op) {
  std::set<std::pair<Rational, Rational>> pts;
  for (const auto& x : a)
    for (const auto& y : a)
      for (const auto& t : a) pts.emplace(apply(x, t, op), apply(y, t, op));
  return pts.size();
}

FiniteRealSet ratio_set(const FiniteRealSet& a) {
  std::vector<Rational> out;
  for (const auto& a1 : a)
    for (const auto& a2 : a)
      for (const auto& x : a)
        if (a2 != x) out.push_back((a1 - x) / (a2 - x));
  return FiniteRealSet(out);
}

FiniteRealSet threshold(const FiniteRealSet& a, const FiniteRealSet& b, long tau, bool multiplicative) {
  std::vector<Rational> out;
  for (const auto& [s, c] : rep(a, b, multiplicative ? SetOp::quot : SetOp::diff))
    if (c >= tau) out.push_back(s);
  return FiniteRealSet(out);
}

FiniteRealSet sym(const FiniteRealSet& q, const FiniteRealSet& r, long t, bool multiplicative) {
  // |Q ∩ (x − R)| resp. |Q ∩ xR⁻¹| as sets, for every x that can reach t >= 1.
  std::vector<Rational> out;
  for (const auto& x : oracle::combine(q, r, multiplicative ? SetOp::prod : SetOp::sum)) {
    std::set<Rational> image;
    for (const auto& y : r) image.insert(multiplicative ? Rational(x / y) : Rational(x - y));
    long c = 0;
    for (const auto& z : image) c += q.contains(z);
    if (c >= t) out.push_back(x);
  }
  return FiniteRealSet(out);
}

std::map<std::vector<Rational>, BigInt> conv_table(const std::vector<std::map<Rational, BigInt>>& f) {
  std::map<std::vector<Rational>, BigInt> table;
  const std::size_t k = f.size();
  for (const auto& [z, v0] : f[0]) {
    // Every choice of points y_1..y_{k−1} in the later supports; x_i = y_i − z.
    std::vector<std::map<Rational, BigInt>::const_iterator> it;
    for (std::size_t i = 1; i < k; ++i) it.push_back(f[i].begin());
    while (true) {
      std::vector<Rational> x;
      BigInt v = v0;
      for (std::size_t i = 1; i < k; ++i) {
        x.push_back(it[i - 1]->first - z);
        v *= it[i - 1]->second;
      }
      table[x] += v;
      std::size_t j = 0;
      while (j + 1 < k && ++it[j] == f[j + 1].end()) {
        it[j] = f[j + 1].begin();
        ++j;
      }
      if (j + 1 == k) break;
    }
  }
  for (auto i = table.begin(); i != table.end();) i = i->second == 0 ? table.erase(i) : std::next(i);
  return table;
}

addcomb::GroupFunction correlate(const addcomb::GroupFunction& f, const addcomb::GroupFunction& g) {
  addcomb::GroupFunction out(f.group);
  const auto& G = f.group;
  for (std::size_t x = 0; x < G.order(); ++x)
    for (std::size_t y = 0; y < G.order(); ++y) out.values[x] += f.values[y] * g.values[G.add(y, x)];
  return out;
}

Rational ekl(const addcomb::GroupFunction& f, unsigned k, unsigned l) {
  const auto& G = f.group;
  const std::size_t n = G.order();
  std::vector<std::size_t> x(k - 1, 0);
  Rational total = 0;
  while (true) {
    Rational c = 0;
    for (std::size_t z = 0; z < n; ++z) {
      Rational p = f.values[z].re;
      for (auto xi : x) p *= f.values[G.add(z, xi)].re;
      c += p;
    }
    Rational p = 1;
    for (unsigned i = 0; i < l; ++i) p *= c;
    total += p;
    std::size_t j = 0;
    while (j < x.size() && ++x[j] == n) x[j++] = 0;
    if (j == x.size()) break;
  }
  return total;
}

std::vector<std::uint64_t> odd_primes(std::size_t t) {
  std::vector<std::uint64_t> p;
  for (std::uint64_t n = 3; p.size() < t; n += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= n && prime; d += 2) prime = n % d != 0;
    if (prime) p.push_back(n);
  }
  return p;
}

BigInt weight_tuples(unsigned l, unsigned k, unsigned n) {
  // Each tuple is k blocks of l bits; enumerate all 2^{lk} bit patterns.
  const unsigned bits = l * k;
  BigInt count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
    if (static_cast<unsigned>(std::popcount(m)) == n) ++count;
  return count;
}

}  // namespace oracle
