#include "addcomb/finite_set.hpp"

#include <algorithm>

#include "addcomb/detail/kernels.hpp"
#include "addcomb/errors.hpp"

namespace addcomb {

using detail::Q64;

FiniteRealSet::FiniteRealSet(std::vector<Rational> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  build_image();
}

FiniteRealSet::FiniteRealSet(std::initializer_list<Rational> elems)
    : FiniteRealSet(std::vector<Rational>(elems)) {}

FiniteRealSet::FiniteRealSet(sorted_tag, std::vector<Rational> sorted_unique)
    : elems_(std::move(sorted_unique)) {
  build_image();
}

FiniteRealSet make_sorted_set(std::vector<Rational> sorted_unique) {
  return FiniteRealSet(FiniteRealSet::sorted_tag{}, std::move(sorted_unique));
}

FiniteRealSet FiniteRealSet::from_integers(std::span<const long> values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return FiniteRealSet(std::move(v));
}

FiniteRealSet FiniteRealSet::from_integers(std::initializer_list<long> values) {
  return from_integers(std::span<const long>(values.begin(), values.size()));
}

void FiniteRealSet::build_image() {
  std::vector<Q64> img;
  img.reserve(elems_.size());
  for (const auto& x : elems_) {
    auto q = detail::small_image(x);
    if (!q) {
      small_.reset();
      return;
    }
    img.push_back(*q);
  }
  small_ = std::move(img);
}

bool FiniteRealSet::contains(const Rational& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::optional<std::size_t> FiniteRealSet::index_of(const Rational& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

FiniteRealSet set_union(const FiniteRealSet& a, const FiniteRealSet& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return make_sorted_set(std::move(out));
}

FiniteRealSet set_intersection(const FiniteRealSet& a, const FiniteRealSet& b) {
  std::vector<Rational> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return make_sorted_set(std::move(out));
}

FiniteRealSet set_difference(const FiniteRealSet& a, const FiniteRealSet& b) {
  std::vector<Rational> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return make_sorted_set(std::move(out));
}

bool is_subset(const FiniteRealSet& a, const FiniteRealSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FiniteRealSet translate(const FiniteRealSet& a, const Rational& x) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(v + x);
  return make_sorted_set(std::move(out));
}

FiniteRealSet dilate(const FiniteRealSet& a, const Rational& x) {
  if (sgn(x) == 0) return a.empty() ? FiniteRealSet{} : FiniteRealSet{Rational(0)};
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(v * x);
  if (sgn(x) < 0) std::reverse(out.begin(), out.end());
  return make_sorted_set(std::move(out));
}

FiniteRealSet reflect(const FiniteRealSet& a, const Rational& x) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) out.push_back(x - *it);
  return make_sorted_set(std::move(out));
}

FiniteRealSet divide_into(const FiniteRealSet& a, const Rational& x) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& v : a)
    if (sgn(v) != 0) out.push_back(x / v);
  return FiniteRealSet(std::move(out));
}

FiniteRealSet without_zero(const FiniteRealSet& a) {
  auto idx = a.index_of(Rational(0));
  if (!idx) return a;
  std::vector<Rational> out(a.begin(), a.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(*idx));
  return make_sorted_set(std::move(out));
}

FiniteRealSet combine(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
  return detail::with_elements({&a, &b}, [&](const auto& spans) {
    auto values = detail::op_values(spans[0], spans[1], op);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(detail::to_rational(v));
    return make_sorted_set(std::move(out));
  });
}

FiniteRealSet slice(const FiniteRealSet& a, const Rational& x, SliceKind kind) {
  std::vector<Rational> out;
  for (const auto& v : a) {
    bool keep = false;
    switch (kind) {
      case SliceKind::additive: keep = a.contains(v + x); break;
      case SliceKind::multiplicative:
        // v ∈ xA  <=>  v = x·w for some w ∈ A
        keep = sgn(x) == 0 ? sgn(v) == 0 && !a.empty() : a.contains(v / x);
        break;
      case SliceKind::reflected: keep = a.contains(x - v); break;
      case SliceKind::ratio:
        // v ∈ x/A with w ∈ A∖{0}: w = x/v
        keep = sgn(v) != 0 && a.contains(x / v) && sgn(x / v) != 0;
        break;
    }
    if (keep) out.push_back(v);
  }
  return make_sorted_set(std::move(out));
}

namespace {

/// Number of distinct values in `buf`, which holds n_runs consecutive runs
/// of length run_len, each sorted ascending. Bottom-up merge, then count.
template <class T>
std::uint64_t count_distinct_runs(std::vector<T>& buf, std::vector<T>& tmp, std::size_t run_len,
                                  std::size_t n_runs) {
  const std::size_t total = run_len * n_runs;
  if (total == 0) return 0;
  tmp.resize(total);
  for (std::size_t width = run_len; width < total; width *= 2) {
    for (std::size_t lo = 0; lo < total; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, total);
      const std::size_t hi = std::min(lo + 2 * width, total);
      std::merge(std::make_move_iterator(buf.begin() + lo), std::make_move_iterator(buf.begin() + mid),
                 std::make_move_iterator(buf.begin() + mid), std::make_move_iterator(buf.begin() + hi),
                 tmp.begin() + lo);
    }
    std::swap(buf, tmp);
  }
  std::uint64_t distinct = 1;
  for (std::size_t i = 1; i < total; ++i)
    if (!(buf[i] == buf[i - 1])) ++distinct;
  return distinct;
}

template <class T>
BigInt fiber_sum(std::span<const T> a, Sign sign, Kind kind) {
  const std::size_t n = a.size();
  check_pairs(n, n, "higher sumset fibers");
  // (fiber key x, index of the element of A_x)
  struct Entry {
    T key;
    std::uint32_t idx;
  };
  std::vector<Entry> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (kind == Kind::additive)
        // x = a_i − a_j and a_j ∈ A∩(A−x)
        entries.push_back({detail::apply(SetOp::diff, a[i], a[j]), static_cast<std::uint32_t>(j)});
      else
        // x = a_i / a_j and a_i ∈ A∩xA
        entries.push_back({detail::apply(SetOp::quot, a[i], a[j]), static_cast<std::uint32_t>(i)});
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    if (l.key < r.key) return true;
    if (r.key < l.key) return false;
    return l.idx < r.idx;
  });

  const SetOp op = kind == Kind::additive ? (sign == Sign::plus ? SetOp::sum : SetOp::diff)
                                         : (sign == Sign::plus ? SetOp::prod : SetOp::quot);
  BigInt total = 0;
  std::uint64_t small_total = 0;
  std::vector<T> buf, tmp;
  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo + 1;
    while (hi < entries.size() && entries[hi].key == entries[lo].key) ++hi;
    const std::size_t fiber = hi - lo;
    if (fiber == 1) {
      small_total += n;
    } else {
      buf.clear();
      buf.reserve(n * fiber);
      for (std::size_t e = lo; e < hi; ++e) {
        const T& b = a[entries[e].idx];
        const std::size_t start = buf.size();
        // A ± b, b·A, A/b as sorted runs
        for (const auto& v : a) {
          if (op == SetOp::sum) buf.push_back(detail::apply(SetOp::sum, v, b));
          else if (op == SetOp::diff) buf.push_back(detail::apply(SetOp::diff, v, b));
          else if (op == SetOp::prod) buf.push_back(detail::apply(SetOp::prod, v, b));
          else buf.push_back(detail::apply(SetOp::quot, v, b));
        }
        if ((op == SetOp::prod || op == SetOp::quot) && detail::sign_of(b) < 0)
          std::reverse(buf.begin() + static_cast<std::ptrdiff_t>(start), buf.end());
      }
      small_total += count_distinct_runs(buf, tmp, n, fiber);
    }
    if (small_total > (std::uint64_t{1} << 62)) {
      total += BigInt(static_cast<unsigned long>(small_total));
      small_total = 0;
    }
    lo = hi;
  }
  total += BigInt(static_cast<unsigned long>(small_total));
  return total;
}

}  // namespace

BigInt higher_sumset_size(const FiniteRealSet& a, Sign sign, Kind kind) {
  if (a.empty()) throw InvalidInput("higher_sumset_size: empty set");
  if (kind == Kind::multiplicative && a.contains_zero())
    throw InvalidInput("higher_sumset_size: multiplicative variant requires 0 not in A");
  return detail::with_elements({&a}, [&](const auto& spans) { return fiber_sum(spans[0], sign, kind); });
}

FiniteRealSet ratio_set(const FiniteRealSet& a) {
  if (a.size() < 2) throw InvalidInput("ratio_set: requires |A| >= 2");
  const std::uint64_t n = a.size();
  check_pairs(n * n, n, "ratio set triples");
  // Q64 route only for integer sets, where differences stay below 2^32.
  bool integral = detail::fast_path_enabled() && a.small() != nullptr;
  if (integral)
    for (const auto& q : *a.small()) integral = integral && q.den == 1;

  std::vector<Rational> out;
  if (integral) {
    const auto& s = *a.small();
    std::vector<Q64> vals;
    vals.reserve(n * n * n);
    for (const auto& base : s)
      for (const auto& num : s)
        for (const auto& den : s) {
          if (den.num == base.num) continue;
          vals.push_back(detail::make_q(num.num - base.num, den.num - base.num));
        }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(detail::to_rational(v));
    return make_sorted_set(std::move(out));
  }
  out.reserve(n * n * n);
  for (const auto& base : a)
    for (const auto& num : a)
      for (const auto& den : a) {
        if (den == base) continue;
        out.push_back((num - base) / (den - base));
      }
  return FiniteRealSet(std::move(out));
}

const char* to_string(Kind k) { return k == Kind::additive ? "additive" : "multiplicative"; }

Kind parse_kind(const std::string& name) {
  if (name == "add" || name == "additive") return Kind::additive;
  if (name == "mult" || name == "multiplicative") return Kind::multiplicative;
  throw InvalidInput("unknown kind '" + name + "'");
}

}  // namespace addcomb
