#include "addcomb/convolution.hpp"

#include <algorithm>
#include <map>

#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"

namespace addcomb {

SparseFunction::SparseFunction(std::vector<std::pair<Rational, BigInt>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& e : entries) {
    if (!values.empty() && values.back().first == e.first)
      values.back().second += e.second;
    else
      values.push_back(std::move(e));
  }
  std::erase_if(values, [](const auto& e) { return sgn(e.second) == 0; });
}

BigInt SparseFunction::at(const Rational& x) const {
  auto it = std::lower_bound(values.begin(), values.end(), x,
                             [](const auto& e, const Rational& v) { return e.first < v; });
  if (it == values.end() || it->first != x) return 0;
  return it->second;
}

SparseFunction indicator(const FiniteRealSet& a) {
  SparseFunction f;
  f.values.reserve(a.size());
  for (const auto& x : a) f.values.emplace_back(x, 1);
  return f;
}

namespace {

using Point = std::vector<Rational>;
/// Sparse function on ℚ^d; zeros pruned.
using Table = std::map<Point, BigInt>;

Table lift(const SparseFunction& f) {
  Table t;
  for (const auto& [x, v] : f.values) t.emplace(Point{x}, v);
  return t;
}

void prune(Table& t) { std::erase_if(t, [](const auto& e) { return sgn(e.second) == 0; }); }

Point plus(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point minus(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// C_m(h_0,…,h_{m−1})(x_1,…,x_{m−1}) for functions on ℚ^d; the key is the
/// concatenation of the m−1 shift vectors.
Table generalized(const std::vector<const Table*>& hs) {
  std::uint64_t work = 1;
  for (const auto* h : hs) {
    work *= std::max<std::size_t>(h->size(), 1);
    check_guard(work, limits().max_table, "generalized convolution");
  }
  Table out;
  if (hs.empty()) return out;
  for (const auto& [z, v0] : *hs[0]) {
    // Depth-first over the remaining functions.
    std::vector<std::pair<Point, BigInt>> level{{Point{}, v0}};
    for (std::size_t i = 1; i < hs.size(); ++i) {
      std::vector<std::pair<Point, BigInt>> next;
      next.reserve(level.size() * hs[i]->size());
      for (const auto& [key, val] : level)
        for (const auto& [y, v] : *hs[i]) {
          Point k2 = key;
          const Point d = minus(y, z);
          k2.insert(k2.end(), d.begin(), d.end());
          next.emplace_back(std::move(k2), val * v);
        }
      level = std::move(next);
    }
    for (auto& [key, val] : level) out[std::move(key)] += val;
  }
  prune(out);
  return out;
}

/// (a * b)(v) = Σ_{u+w=v} a(u) b(w).
Table sum_conv(const Table& a, const Table& b) {
  check_pairs(a.size(), b.size(), "sparse sum-convolution");
  Table out;
  for (const auto& [u, x] : a)
    for (const auto& [w, y] : b) out[plus(u, w)] += x * y;
  prune(out);
  return out;
}

/// (p∘h)(s) = Σ_v p(v) h(v+s).
Table correlate(const Table& p, const Table& h) {
  check_pairs(p.size(), h.size(), "sparse correlation");
  Table out;
  for (const auto& [v, x] : p)
    for (const auto& [w, y] : h) out[minus(w, v)] += x * y;
  prune(out);
  return out;
}

Table iterated_circ(const std::vector<const Table*>& hs) {
  if (hs.size() == 1) return *hs[0];
  Table p = *hs[0];
  for (std::size_t i = 1; i + 1 < hs.size(); ++i) p = sum_conv(p, *hs[i]);
  return correlate(p, *hs.back());
}

/// Σ_x Π_i t_i(x).
BigInt product_total(const std::vector<const Table*>& ts) {
  BigInt total = 0;
  for (const auto& [x, v] : *ts[0]) {
    BigInt term = v;
    for (std::size_t i = 1; i < ts.size() && sgn(term) != 0; ++i) {
      auto it = ts[i]->find(x);
      if (it == ts[i]->end())
        term = 0;
      else
        term *= it->second;
    }
    total += term;
  }
  return total;
}

BigInt power_total(const Table& t, unsigned l) {
  BigInt total = 0, term;
  for (const auto& [x, v] : t) {
    mpz_pow_ui(term.get_mpz_t(), v.get_mpz_t(), l);
    total += term;
  }
  return total;
}

std::vector<const Table*> pointers(const std::vector<Table>& ts) {
  std::vector<const Table*> out;
  for (const auto& t : ts) out.push_back(&t);
  return out;
}

/// C_l(f) as a function on ℚ^{l−1}.
Table c_power(const Table& f, unsigned l) {
  std::vector<const Table*> hs(l, &f);
  return generalized(hs);
}

}  // namespace

std::vector<ConvolutionPoint> conv_table(std::span<const SparseFunction> functions, unsigned k) {
  if (k < 2) throw InvalidInput("conv_table: k must be >= 2");
  if (functions.size() != 1 && functions.size() != k)
    throw InvalidInput("conv_table: expected 1 or k functions");
  std::vector<Table> lifted;
  for (const auto& f : functions) lifted.push_back(lift(f));
  std::vector<const Table*> hs;
  for (unsigned i = 0; i < k; ++i) hs.push_back(&lifted[functions.size() == 1 ? 0 : i]);
  const Table t = generalized(hs);
  std::vector<ConvolutionPoint> out;
  out.reserve(t.size());
  for (const auto& [x, v] : t) out.push_back({x, v});
  return out;
}

std::pair<BigInt, BigInt> commutativity_check(std::span<const SparseFunction> f, std::span<const SparseFunction> g,
                                              unsigned l, CommutativityMode mode) {
  if (l < 2) throw InvalidInput("commutativity_check: l must be >= 2");
  std::vector<Table> tf;
  for (const auto& x : f) tf.push_back(lift(x));

  switch (mode) {
    case CommutativityMode::scalar: {
      if (f.size() != l || g.size() != l) throw InvalidInput("commutativity_check(scalar): need l functions on each side");
      std::vector<Table> tg;
      for (const auto& x : g) tg.push_back(lift(x));
      const Table cf = generalized(pointers(tf));
      const Table cg = generalized(pointers(tg));
      const BigInt lhs = product_total({&cf, &cg});
      std::vector<Table> corr;
      for (unsigned j = 0; j < l; ++j) corr.push_back(correlate(tf[j], tg[j]));
      return {lhs, product_total(pointers(corr))};
    }
    case CommutativityMode::multi_scalar: {
      if (f.size() < 2 || !g.empty()) throw InvalidInput("commutativity_check(multi_scalar): need k >= 2 functions, no g");
      std::vector<Table> cs;
      for (const auto& t : tf) cs.push_back(c_power(t, l));
      const BigInt lhs = product_total(pointers(cs));
      return {lhs, power_total(generalized(pointers(tf)), l)};
    }
    case CommutativityMode::sigma: {
      if (f.size() < 2 || !g.empty()) throw InvalidInput("commutativity_check(sigma): need k >= 2 functions, no g");
      std::vector<Table> cs;
      for (const auto& t : tf) cs.push_back(c_power(t, l));
      std::vector<const Table*> tail = pointers(cs);
      tail.erase(tail.begin());
      const Table inner = iterated_circ(tail);
      const BigInt lhs = product_total({&cs[0], &inner});
      return {lhs, power_total(iterated_circ(pointers(tf)), l)};
    }
  }
  throw InvalidInput("commutativity_check: unknown mode");
}

}  // namespace addcomb
