#include <doctest.h>

#include "addcomb/errors.hpp"
#include "addcomb/finite_set.hpp"
#include "addcomb/generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace addcomb;
using testing::ints;
using testing::rats;

TEST_SUITE("exact-sets") {

TEST_CASE("rationals parse to canonical form") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "3/-4", "abc", "1/", "/2", "1.5", "1//2", "--1", " "})
    CHECK_THROWS_AS(parse_rational(bad), InvalidInput);
}

TEST_CASE("parse and print round-trip") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational x(rng.between(-1000000, 1000000), static_cast<unsigned long>(1 + rng.below(1000)));
    x.canonicalize();
    CHECK(parse_rational(to_string(x)) == x);
  }
  const Rational huge = parse_rational("123456789012345678901234567890/7");
  CHECK(parse_rational(to_string(huge)) == huge);
}

TEST_CASE("integer roots") {
  CHECK(ceil_sqrt(BigInt(0)) == 0);
  CHECK(ceil_sqrt(BigInt(16)) == 4);
  CHECK(ceil_sqrt(BigInt(17)) == 5);
  CHECK(pow(BigInt(3), 4) == 81);
  CHECK(pow(Rational(1, 2), 3) == Rational(1, 8));
}

TEST_CASE("sets sort and deduplicate") {
  const FiniteRealSet a = rats({"3", "1/2", "2/4", "-1", "3"});
  REQUIRE(a.size() == 3);
  CHECK(a[0] == -1);
  CHECK(a[1] == Rational(1, 2));
  CHECK(a[2] == 3);
  CHECK(a.contains(Rational(1, 2)));
  CHECK_FALSE(a.contains_zero());
  CHECK(a.index_of(Rational(3)) == 2u);
  CHECK(a.small() != nullptr);
  CHECK(rats({"4294967296"}).small() == nullptr);
}

TEST_CASE("set algebra") {
  const auto a = ints({0, 1, 2, 5}), b = ints({1, 5, 7});
  CHECK(set_union(a, b) == ints({0, 1, 2, 5, 7}));
  CHECK(set_intersection(a, b) == ints({1, 5}));
  CHECK(set_difference(a, b) == ints({0, 2}));
  CHECK(is_subset(ints({1, 5}), a));
  CHECK_FALSE(is_subset(b, a));
  CHECK(translate(a, 1) == ints({1, 2, 3, 6}));
  CHECK(dilate(a, 2) == ints({0, 2, 4, 10}));
  CHECK(reflect(a, 1) == ints({-4, -1, 0, 1}));
  CHECK(divide_into(a, 10) == ints({2, 5, 10}));
  CHECK(without_zero(a) == ints({1, 2, 5}));
}

TEST_CASE("combine examples") {
  CHECK(combine(ints({0, 1}), ints({0, 1}), SetOp::sum) == ints({0, 1, 2}));
  CHECK(combine(ints({1}), ints({2, 3}), SetOp::prod) == ints({2, 3}));
  CHECK(combine(ints({1, 2, 4}), ints({1, 2, 4}), SetOp::quot) == rats({"1/4", "1/2", "1", "2", "4"}));
  CHECK(combine(ints({1, 2}), ints({0, 2}), SetOp::quot) == rats({"1/2", "1"}));
}

TEST_CASE("slice examples") {
  CHECK(slice(ints({0, 1}), 1, SliceKind::additive) == ints({0}));
  const auto a = ints({3, 8, 9});
  CHECK(slice(a, 0, SliceKind::additive) == a);
  CHECK(slice(ints({1, 2, 4}), 2, SliceKind::multiplicative) == ints({2, 4}));
  CHECK(slice(ints({0, 1, 3}), 3, SliceKind::reflected) == ints({0, 3}));
  CHECK(slice(ints({1, 2, 3, 6}), 6, SliceKind::ratio) == ints({1, 2, 3, 6}));
}

TEST_CASE("higher sumset examples") {
  CHECK(higher_sumset_size(ints({0, 1}), Sign::plus, Kind::additive) == 7);
  CHECK(higher_sumset_size(ints({5}), Sign::plus, Kind::additive) == 1);
  CHECK(higher_sumset_size(ints({1, 2}), Sign::plus, Kind::multiplicative) == 7);
  CHECK_THROWS_AS(higher_sumset_size(ints({0, 1}), Sign::plus, Kind::multiplicative), InvalidInput);
}

TEST_CASE("ratio set examples") {
  CHECK(ratio_set(ints({0, 1})) == ints({0, 1}));
  CHECK(ratio_set(ints({0, 1, 2})) == rats({"-1", "0", "1/2", "1", "2"}));
  CHECK_THROWS_AS(ratio_set(ints({4})), InvalidInput);
}

TEST_CASE("random sets agree with brute force on both kernels") {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto a = testing::random_rational_set(rng, 1 + rng.below(9), -12, 12);
    const auto b = testing::random_rational_set(rng, 1 + rng.below(9), -12, 12);
    for (SetOp op : {SetOp::sum, SetOp::diff, SetOp::prod, SetOp::quot}) {
      const auto expect = oracle::combine(a, b, op);
      CHECK(combine(a, b, op) == expect);
      CHECK(testing::without_fast_path([&] { return combine(a, b, op); }) == expect);
    }
    CHECK(higher_sumset_size(a, Sign::plus, Kind::additive) == oracle::higher(a, SetOp::sum));
    CHECK(higher_sumset_size(a, Sign::minus, Kind::additive) == oracle::higher(a, SetOp::diff));
    const auto as = without_zero(a);
    if (!as.empty()) {
      CHECK(higher_sumset_size(as, Sign::plus, Kind::multiplicative) == oracle::higher(as, SetOp::prod));
      CHECK(testing::without_fast_path([&] { return higher_sumset_size(as, Sign::minus, Kind::multiplicative); }) ==
            oracle::higher(as, SetOp::quot));
    }
    if (a.size() >= 2) {
      const auto r = ratio_set(a);
      CHECK(r == oracle::ratio_set(a));
      CHECK(reflect(r, 1) == r);
      CHECK(divide_into(without_zero(r), 1) == without_zero(r));
    }
  }
}

TEST_CASE("generators") {
  CHECK(arithmetic_progression(4, 2, 3) == ints({2, 5, 8, 11}));
  CHECK(geometric_progression(4, 3) == ints({1, 3, 9, 27}));
  Rng r1(9), r2(9);
  const auto x = random_integer_set(r1, 20, -100, 100);
  CHECK(x.size() == 20);
  CHECK(x == random_integer_set(r2, 20, -100, 100));
  CHECK_THROWS_AS(random_integer_set(r1, 10, 0, 5), InvalidInput);
}

}  // TEST_SUITE
