#include <doctest.h>

#include "addcomb/convolution.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace addcomb;
using testing::ints;

namespace {

std::map<Rational, BigInt> as_map(const RepFunction& r) {
  std::map<Rational, BigInt> m;
  for (const auto& [x, c] : r.counts) m[x] = c;
  return m;
}

std::map<Rational, BigInt> as_map(const std::map<Rational, long>& r) {
  std::map<Rational, BigInt> m;
  for (const auto& [x, c] : r) m[x] = c;
  return m;
}

std::map<Rational, BigInt> as_map(const SparseFunction& f) {
  std::map<Rational, BigInt> m;
  for (const auto& [x, v] : f.values) m[x] = v;
  return m;
}

SparseFunction random_function(Rng& rng, std::size_t support) {
  std::vector<std::pair<Rational, BigInt>> v;
  for (std::size_t i = 0; i < support; ++i) v.emplace_back(Rational(rng.between(-5, 5)), BigInt(rng.between(-3, 3)));
  return SparseFunction(v);
}

}  // namespace

TEST_SUITE("convolution-energy") {

TEST_CASE("representation function examples") {
  const auto r = rep_function(ints({0, 1}), ints({0, 1}), SetOp::sum);
  CHECK(as_map(r) == std::map<Rational, BigInt>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(r.total == 4);
  CHECK(r.at(Rational(1)) == 2);
  CHECK(r.at(Rational(7)) == 0);
  CHECK(as_map(rep_function(ints({3}), ints({4}), SetOp::sum)) == std::map<Rational, BigInt>{{7, 1}});
  CHECK(as_map(rep_function(ints({1, 2}), ints({1, 2}), SetOp::prod)) ==
        std::map<Rational, BigInt>{{1, 1}, {2, 2}, {4, 1}});
  CHECK(multiplicity_profile(ints({0, 1}), ints({0, 1}), SetOp::sum) == std::vector<std::uint64_t>{2, 1, 1});
}

TEST_CASE("energy examples") {
  CHECK(energy2(ints({0, 1}), ints({0, 1}), Kind::additive).value == 6);
  CHECK(energy2(ints({0, 1, 2}), ints({0, 1, 2}), Kind::additive).value == 19);
  CHECK(energy2(ints({4}), ints({9}), Kind::multiplicative).value == 1);
  const FiniteRealSet three[] = {ints({0, 1}), ints({0, 1}), ints({0, 1})};
  CHECK(energy_k(three, Kind::additive).value == 10);
  CHECK(energy_k(ints({0, 1}), 3, Kind::additive).value == 10);
  const FiniteRealSet singles[] = {ints({2}), ints({2}), ints({2}), ints({2})};
  CHECK(energy_k(singles, Kind::multiplicative).value == 1);
  CHECK(energy_k_pair(ints({0, 1}), ints({0, 2}), 2, Kind::additive).value == 4);
  CHECK_THROWS_AS(energy_k(ints({0, 1}), 3, Kind::multiplicative), InvalidInput);
  // E2x with zeros counts 0·b1 = 0·b2.
  CHECK(energy2(ints({0, 1}), ints({1, 2}), Kind::multiplicative).value == 6);
}

TEST_CASE("sigma_k examples") {
  CHECK(sigma_k(ints({-1, 0, 1}), 2) == 3);
  CHECK(sigma_k(ints({1, 2}), 2) == 0);
  CHECK(sigma_k(ints({0}), 3) == 1);
}

TEST_CASE("threshold and Sym examples") {
  CHECK(threshold_set(ints({0, 1}), ints({0, 1}), 1, Kind::additive) == ints({-1, 0, 1}));
  CHECK(threshold_set(ints({0, 1}), ints({0, 1}), 2, Kind::additive) == ints({0}));
  const auto a = ints({1, 3, 4});
  CHECK(threshold_set(a, a, 4, Kind::multiplicative).empty());
  CHECK_THROWS_AS(threshold_set(a, a, Rational(1, 2), Kind::additive), InvalidInput);
  CHECK(sym_set(ints({0, 1}), ints({0, 1}), 1, Kind::additive) == ints({0, 1, 2}));
  CHECK(sym_set(ints({0, 1}), ints({0, 1}), 2, Kind::additive) == ints({1}));
  CHECK(sym_set(ints({1, 2, 4}), ints({1, 2}), 2, Kind::multiplicative) == ints({2, 4}));
  CHECK_THROWS_AS(sym_set(a, a, 0, Kind::additive), InvalidInput);
}

TEST_CASE("random sets agree with brute force on both kernels") {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto a = testing::random_rational_set(rng, 1 + rng.below(10), -9, 9);
    const auto b = testing::random_rational_set(rng, 1 + rng.below(10), -9, 9);
    for (SetOp op : {SetOp::sum, SetOp::diff, SetOp::prod, SetOp::quot}) {
      const auto expect = as_map(oracle::rep(a, b, op));
      CHECK(as_map(rep_function(a, b, op)) == expect);
      CHECK(as_map(testing::without_fast_path([&] { return rep_function(a, b, op); })) == expect);
    }
    CHECK(energy2(a, b, Kind::additive).value == oracle::energy(a, b, SetOp::sum));
    CHECK(energy2(a, b, Kind::multiplicative).value == oracle::energy(a, b, SetOp::prod));
    CHECK(testing::without_fast_path([&] { return energy2(a, b, Kind::multiplicative).value; }) ==
          oracle::energy(a, b, SetOp::prod));
    for (unsigned k : {2u, 3u, 4u}) CHECK(energy_k_pair(a, b, k, Kind::additive).value == oracle::energy_k(a, b, k, SetOp::sum));
    const auto as = without_zero(a), bs = without_zero(b);
    if (!as.empty() && !bs.empty()) {
      CHECK(energy_k_pair(as, bs, 3, Kind::multiplicative).value == oracle::energy_k(as, bs, 3, SetOp::prod));
      CHECK(testing::without_fast_path([&] { return energy_k_pair(as, bs, 3, Kind::multiplicative).value; }) ==
            oracle::energy_k(as, bs, 3, SetOp::prod));
    }
    CHECK(sigma_k(a, 3) == oracle::sigma_k(a, 3));
    for (long tau : {1L, 2L, 3L}) {
      CHECK(threshold_set(a, b, tau, Kind::additive) == oracle::threshold(a, b, tau, false));
      if (!bs.empty()) CHECK(threshold_set(a, bs, tau, Kind::multiplicative) == oracle::threshold(a, bs, tau, true));
      CHECK(sym_set(a, b, tau, Kind::additive) == oracle::sym(a, b, tau, false));
      if (!bs.empty()) CHECK(sym_set(a, bs, tau, Kind::multiplicative) == oracle::sym(a, bs, tau, true));
    }
  }
}

TEST_CASE("large elements take the exact path") {
  const auto a = testing::rats({"1", "4294967296", "12345678901234567891/3"});
  CHECK(a.small() == nullptr);
  CHECK(energy2(a, a, Kind::additive).value == oracle::energy(a, a, SetOp::sum));
  CHECK(energy_k(a, 3, Kind::multiplicative).value == oracle::energy_k(a, a, 3, SetOp::prod));
}

TEST_CASE("convolution table examples") {
  const SparseFunction one[] = {indicator(ints({0, 1}))};
  const auto t2 = conv_table(one, 2);
  REQUIRE(t2.size() == 3);
  CHECK(t2[0].shifts == std::vector<Rational>{-1});
  CHECK(t2[0].value == 1);
  CHECK(t2[1].value == 2);
  CHECK(t2[2].value == 1);
  const SparseFunction single[] = {indicator(ints({5}))};
  const auto t3 = conv_table(single, 3);
  REQUIRE(t3.size() == 1);
  CHECK(t3[0].shifts == std::vector<Rational>{0, 0});
  BigInt sq = 0;
  for (const auto& p : conv_table(one, 3)) sq += p.value * p.value;
  CHECK(sq == 10);
  CHECK_THROWS_AS(conv_table(one, 1), InvalidInput);
}

TEST_CASE("convolution tables agree with brute force") {
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const unsigned k = 2 + static_cast<unsigned>(rng.below(3));
    std::vector<SparseFunction> f;
    std::vector<std::map<Rational, BigInt>> maps;
    for (unsigned j = 0; j < k; ++j) {
      f.push_back(random_function(rng, 1 + rng.below(5)));
      if (f.back().values.empty()) f.back() = indicator(ints({0}));
      maps.push_back(as_map(f.back()));
    }
    std::map<std::vector<Rational>, BigInt> got;
    for (const auto& p : conv_table(f, k)) got[p.shifts] = p.value;
    CHECK(got == oracle::conv_table(maps));
  }
}

TEST_CASE("commutativity identities") {
  const SparseFunction f[] = {indicator(ints({0, 1})), indicator(ints({0, 1}))};
  CHECK(commutativity_check(f, f, 2, CommutativityMode::scalar) == std::pair<BigInt, BigInt>{6, 6});
  const SparseFunction single[] = {indicator(ints({3})), indicator(ints({3})), indicator(ints({3}))};
  for (unsigned l : {2u, 3u, 4u}) {
    const auto [lhs, rhs] = commutativity_check(single, {}, l, CommutativityMode::sigma);
    CHECK(lhs == 1);
    CHECK(rhs == 1);
  }
  const auto [ml, mr] = commutativity_check(f, {}, 2, CommutativityMode::multi_scalar);
  CHECK(ml == mr);
  const SparseFunction three[] = {indicator(ints({0})), indicator(ints({0})), indicator(ints({0}))};
  CHECK_THROWS_AS(commutativity_check(f, three, 2, CommutativityMode::scalar), InvalidInput);

  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<SparseFunction> g, h;
    for (int j = 0; j < 3; ++j) {
      g.push_back(random_function(rng, 4));
      h.push_back(random_function(rng, 4));
    }
    const auto [a, b] = commutativity_check(g, h, 3, CommutativityMode::scalar);
    CHECK(a == b);
    const auto [c, d] = commutativity_check(g, {}, 2, CommutativityMode::sigma);
    CHECK(c == d);
  }
}

TEST_CASE("guards name the operation") {
  const auto a = arithmetic_progression(100);
  const auto saved = limits();
  limits().max_pairs = 50;
  CHECK_THROWS_AS(energy2(a, a, Kind::additive), ResourceLimit);
  limits() = saved;
  limits().max_table = 10;
  const SparseFunction f[] = {indicator(ints({0, 1, 2, 3, 4}))};
  CHECK_THROWS_AS(conv_table(f, 4), ResourceLimit);
  limits() = saved;
}

}  // TEST_SUITE
