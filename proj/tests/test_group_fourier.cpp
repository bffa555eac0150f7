#include <doctest.h>

#include <cmath>
#include <sstream>

#include "addcomb/errors.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/group.hpp"
#include "addcomb/norms.hpp"
#include "oracle.hpp"

using namespace addcomb;

namespace {

GroupFunction random_real(Rng& rng, const FiniteAbelianGroup& g, long lo, long hi) {
  std::vector<Rational> v(g.order());
  for (auto& x : v) x = rng.between(lo, hi);
  return GroupFunction::real(g, v);
}

}  // namespace

TEST_SUITE("group-fourier") {

TEST_CASE("group arithmetic") {
  const auto z5 = FiniteAbelianGroup::cyclic(5);
  CHECK(z5.add(3, 4) == 2);
  CHECK(z5.neg(2) == 3);
  CHECK(z5.sub(1, 3) == 3);
  const auto c3 = FiniteAbelianGroup::cube(3);
  CHECK(c3.order() == 8);
  CHECK(c3.add(5, 3) == 6);
  CHECK(c3.neg(5) == 5);
}

TEST_CASE("delta transforms to a constant") {
  const auto z4 = FiniteAbelianGroup::cyclic(4);
  for (const auto& z : dft(GroupFunction::indicator(z4, {0}))) CHECK(std::abs(z - std::complex<long double>(1)) < 1e-15L);
}

TEST_CASE("the full character has one nonzero coefficient") {
  for (unsigned n : {2u, 3u, 4u}) {
    const auto g = FiniteAbelianGroup::cube(n);
    const std::size_t all = (std::size_t{1} << n) - 1;
    const auto w = walsh(cube_character(g, all));
    for (std::size_t r = 0; r < g.order(); ++r)
      CHECK(w[r] == GaussianRational{r == all ? Rational(g.order()) : Rational(0), 0});
  }
}

TEST_CASE("correlation agrees with the definition") {
  Rng rng(4);
  for (const auto& g : {FiniteAbelianGroup::cyclic(7), FiniteAbelianGroup::cube(3)}) {
    const auto f = random_real(rng, g, -4, 4), h = random_real(rng, g, -4, 4);
    CHECK(correlate(f, h).values == oracle::correlate(f, h).values);
  }
}

TEST_CASE("Fourier identities hold numerically") {
  Rng rng(6);
  for (const auto& g : {FiniteAbelianGroup::cyclic(9), FiniteAbelianGroup::cyclic(32), FiniteAbelianGroup::cube(5)}) {
    const auto f = random_real(rng, g, -9, 9), h = random_real(rng, g, -9, 9);
    CHECK(fourier_identities(f, h).worst() < 1e-12L);
  }
}

TEST_CASE("group function text round-trip") {
  const auto g = FiniteAbelianGroup::cyclic(3);
  const GroupFunction f(g, {{Rational(1, 2), Rational(-1)}, {Rational(3), Rational(0)}, {Rational(0), Rational(2, 7)}});
  std::stringstream ss;
  write_group_function(ss, f);
  const GroupFunction back = read_group_function(ss);
  CHECK(back.group == g);
  CHECK(back.values == f.values);
  std::istringstream bad("group cyclic 2\n1 0\n");
  CHECK_THROWS_AS(read_group_function(bad), ParseError);
}

TEST_CASE("E_k examples") {
  const auto z8 = FiniteAbelianGroup::cyclic(8);
  const auto ind = GroupFunction::indicator(z8, {0, 1});
  CHECK(ek_raw(ind, 3) == 10);
  CHECK(ek_raw(GroupFunction(z8), 3) == 0);
  const auto c2 = FiniteAbelianGroup::cube(2);
  CHECK(ek_raw(cube_character(c2, 3), 3) == 0);
  CHECK(ekl_raw(GroupFunction::indicator(FiniteAbelianGroup::cyclic(4), {0}), 2, 3, EklOrder::over_k) == 1);
  CHECK(ekl_raw(ind, 2, 2, EklOrder::over_l) == 6);
  CHECK_THROWS_AS(ekl_raw(ind, 3, 3, EklOrder::over_k), InvalidInput);
}

TEST_CASE("E_k forms agree") {
  Rng rng(12);
  for (const auto& g : {FiniteAbelianGroup::cyclic(6), FiniteAbelianGroup::cube(3)}) {
    for (int i = 0; i < 5; ++i) {
      const auto f = random_real(rng, g, -3, 3);
      for (unsigned k : {2u, 3u}) {
        const Rational exact = ek_raw(f, k);
        CHECK(exact == oracle::ekl(f, k, 2));
        CHECK(exact == ek_raw_ck(f, k));
        const long double scale = std::max<long double>(1, ek_raw(f.abs_real(), k).get_d());
        CHECK(std::fabs(ek_raw_fourier(f, k) - exact.get_d()) <= 1e-9L * scale);
        if (g.type() == FiniteAbelianGroup::Type::cube) CHECK(exact == ek_raw_walsh(f, k));
      }
      CHECK(ekl_raw(f, 2, 4, EklOrder::over_k) == oracle::ekl(f, 2, 4));
      CHECK(ekl_raw(f, 3, 2, EklOrder::over_l) == oracle::ekl(f, 3, 2));
    }
  }
}

TEST_CASE("E_k of complex functions is real and nonnegative") {
  Rng rng(13);
  const auto g = FiniteAbelianGroup::cyclic(5);
  for (int i = 0; i < 10; ++i) {
    std::vector<GaussianRational> v(5);
    for (auto& z : v) z = {Rational(rng.between(-2, 2)), Rational(rng.between(-2, 2))};
    for (unsigned k : {1u, 2u, 3u}) CHECK(sgn(ek_raw(GroupFunction(g, v), k)) >= 0);
  }
}

TEST_CASE("norm reports") {
  const auto ind = GroupFunction::indicator(FiniteAbelianGroup::cyclic(8), {0, 1});
  const NormReport r = ek_norm(ind, 2);
  CHECK(r.raw == 6);
  CHECK(r.root.substr(0, 6) == "1.5650");  // 6^(1/4)
  CHECK(ekl_norm(ind, 2, 2).raw == 6);
}

TEST_CASE("triangle inequality") {
  const auto z12 = FiniteAbelianGroup::cyclic(12);
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_real(rng, z12, -3, 3), g = random_real(rng, z12, -3, 3);
    CHECK(triangle_check(f, g, 3).verdict == Verdict::holds);
  }
  const auto f = random_real(rng, z12, -3, 3);
  CHECK(triangle_check(f, GroupFunction(z12), 2).verdict == Verdict::holds);
  CHECK(triangle_check(f, f, 4, 2).verdict == Verdict::holds);
}

TEST_CASE("Holder step for correlation products") {
  const auto z10 = FiniteAbelianGroup::cyclic(10);
  const auto d = GroupFunction::indicator(z10, {3});
  const auto single = holder_ck_check({{d, d}, {d, d}});
  CHECK(single.sigma == 1);
  CHECK(single.rhs_product == 1);
  CHECK(single.verdict == Verdict::holds);
  Rng rng(15);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::pair<GroupFunction, GroupFunction>> pairs;
    for (int j = 0; j < 3; ++j) {
      std::vector<std::size_t> s1, s2;
      for (std::size_t x = 0; x < 10; ++x) {
        if (rng.below(2)) s1.push_back(x);
        if (rng.below(2)) s2.push_back(x);
      }
      pairs.emplace_back(GroupFunction::indicator(z10, s1), GroupFunction::indicator(z10, s2));
    }
    CHECK(holder_ck_check(pairs).verdict == Verdict::holds);
  }
}

TEST_CASE("zero-norm contract") {
  const auto z6 = FiniteAbelianGroup::cyclic(6);
  CHECK(zero_norm_check(GroupFunction(z6), 2).status == ZeroNorm::f_is_zero);
  const auto ch = cube_character(FiniteAbelianGroup::cube(3), 7);
  const auto r = zero_norm_check(ch, 2);
  CHECK(r.status == ZeroNorm::f_nonzero_with_positive_norm);
  CHECK(r.consistent);
  CHECK(zero_norm_check(GroupFunction::indicator(z6, {1, 4}), 4).status == ZeroNorm::f_nonzero_with_positive_norm);
  CHECK_THROWS_AS(zero_norm_check(ch, 3), InvalidInput);
}

}  // TEST_SUITE
