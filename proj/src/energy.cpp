#include "addcomb/energy.hpp"

#include <algorithm>
#include <map>

#include "addcomb/detail/kernels.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"

namespace addcomb {

BigInt RepFunction::at(const Rational& x) const {
  auto it = std::lower_bound(counts.begin(), counts.end(), x,
                             [](const auto& entry, const Rational& v) { return entry.first < v; });
  if (it == counts.end() || it->first != x) return 0;
  return it->second;
}

RepFunction rep_function(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  return detail::with_elements({&a, &b}, [&](const auto& spans) {
    const auto counts = detail::rep_counts(spans[0], spans[1], op);
    RepFunction out;
    out.counts.reserve(counts.size());
    for (const auto& [v, c] : counts) {
      out.counts.emplace_back(detail::to_rational(v), BigInt(static_cast<unsigned long>(c)));
      out.total += static_cast<unsigned long>(c);
    }
    return out;
  });
}

std::vector<std::uint64_t> multiplicity_profile(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  return detail::with_elements(
      {&a, &b}, [&](const auto& spans) { return detail::multiplicity_profile(spans[0], spans[1], op); });
}

namespace {

void require_nonzero(const FiniteRealSet& s, const char* what) {
  if (s.contains_zero()) throw InvalidInput(std::string(what) + ": multiplicative kind requires 0 not in the set");
}

SetOp difference_op(Kind kind) { return kind == Kind::additive ? SetOp::diff : SetOp::quot; }

}  // namespace

EnergyValue energy2(const FiniteRealSet& a, const FiniteRealSet& b, Kind kind) {
  const SetOp op = kind == Kind::additive ? SetOp::sum : SetOp::prod;
  BigInt value = detail::with_elements({&a, &b}, [&](const auto& spans) {
    return detail::power_sum(detail::rep_counts(spans[0], spans[1], op), 2);
  });
  return {std::move(value), kind, 2};
}

EnergyValue energy_k_pair(const FiniteRealSet& a, const FiniteRealSet& b, unsigned k, Kind kind) {
  if (k < 1) throw InvalidInput("energy_k: k must be >= 1");
  if (kind == Kind::multiplicative) {
    require_nonzero(a, "energy_k");
    require_nonzero(b, "energy_k");
  }
  BigInt value = detail::with_elements({&a, &b}, [&](const auto& spans) {
    return detail::power_sum(detail::rep_counts(spans[0], spans[1], difference_op(kind)), k);
  });
  return {std::move(value), kind, k};
}

EnergyValue energy_k(const FiniteRealSet& a, unsigned k, Kind kind) { return energy_k_pair(a, a, k, kind); }

EnergyValue energy_k(std::span<const FiniteRealSet> sets, Kind kind) {
  if (sets.size() < 2) throw InvalidInput("energy_k: need at least two sets");
  std::vector<const FiniteRealSet*> ptrs;
  for (const auto& s : sets) {
    if (s.empty()) throw InvalidInput("energy_k: empty set");
    if (kind == Kind::multiplicative) require_nonzero(s, "energy_k");
    ptrs.push_back(&s);
  }
  BigInt value = detail::with_elements(std::span<const FiniteRealSet* const>(ptrs), [&](const auto& spans) {
    using T = typename std::decay_t<decltype(spans[0])>::value_type;
    // Repeated sets share one table.
    std::vector<detail::Counts<T>> tables;
    std::vector<std::size_t> which(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
      std::size_t j = 0;
      while (j < i && !(spans[j].data() == spans[i].data() && spans[j].size() == spans[i].size())) ++j;
      if (j < i) {
        which[i] = which[j];
      } else {
        which[i] = tables.size();
        tables.push_back(detail::rep_counts(spans[i], spans[i], difference_op(kind)));
      }
    }
    if (tables.size() == 1) return detail::power_sum(tables[0], static_cast<unsigned>(spans.size()));
    std::vector<const detail::Counts<T>*> ordered;
    for (auto w : which) ordered.push_back(&tables[w]);
    return detail::product_sum(ordered);
  });
  return {std::move(value), kind, static_cast<unsigned>(sets.size())};
}

BigInt sigma_k(const FiniteRealSet& a, unsigned k) {
  if (k < 2) throw InvalidInput("sigma_k: k must be >= 2");
  if (a.empty()) return 0;
  // Multiplicities of (k−1)-fold sums, then match against −a.
  std::map<Rational, BigInt> partial;
  for (const auto& x : a) partial.emplace(x, 1);
  for (unsigned step = 2; step < k; ++step) {
    check_pairs(partial.size(), a.size(), "sigma_k partial sums");
    std::map<Rational, BigInt> next;
    for (const auto& [s, c] : partial)
      for (const auto& x : a) next[s + x] += c;
    partial = std::move(next);
  }
  BigInt total = 0;
  for (const auto& x : a) {
    auto it = partial.find(-x);
    if (it != partial.end()) total += it->second;
  }
  return total;
}

FiniteRealSet threshold_set(const FiniteRealSet& a, const FiniteRealSet& b, const Rational& tau, Kind kind) {
  if (tau < 1) throw InvalidInput("threshold_set: tau must be >= 1");
  if (kind == Kind::multiplicative) require_nonzero(b, "threshold_set");
  return detail::with_elements({&a, &b}, [&](const auto& spans) {
    const auto counts = detail::rep_counts(spans[0], spans[1], difference_op(kind));
    std::vector<Rational> out;
    for (const auto& [v, c] : counts)
      if (Rational(static_cast<unsigned long>(c)) >= tau) out.push_back(detail::to_rational(v));
    return make_sorted_set(std::move(out));
  });
}

FiniteRealSet sym_set(const FiniteRealSet& q, const FiniteRealSet& r, const Rational& t, Kind kind) {
  if (sgn(t) <= 0) throw InvalidInput("sym_set: t must be > 0");
  if (kind == Kind::multiplicative) require_nonzero(r, "sym_set");
  const SetOp op = kind == Kind::additive ? SetOp::sum : SetOp::prod;
  return detail::with_elements({&q, &r}, [&](const auto& spans) {
    const auto counts = detail::rep_counts(spans[0], spans[1], op);
    std::vector<Rational> out;
    for (const auto& [v, c] : counts) {
      std::uint64_t m = c;
      // |Q ∩ 0·R⁻¹| = |Q ∩ {0}|, whereas r_{QR}(0) counts every (0, r).
      if (kind == Kind::multiplicative && detail::is_zero(v)) m = 1;
      if (Rational(static_cast<unsigned long>(m)) >= t) out.push_back(detail::to_rational(v));
    }
    return make_sorted_set(std::move(out));
  });
}

}  // namespace addcomb
