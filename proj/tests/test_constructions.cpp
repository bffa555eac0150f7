#include <doctest.h>

#include "addcomb/constructions.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace addcomb;
using testing::ints;

TEST_SUITE("constructions") {

TEST_CASE("odd primes match trial division") {
  CHECK(first_odd_primes(0).empty());
  CHECK(first_odd_primes(5000) == oracle::odd_primes(5000));
  const auto saved = limits();
  limits().max_sieve = 100;
  CHECK_THROWS_AS(first_odd_primes(1000), ResourceLimit);
  limits() = saved;
}

TEST_CASE("P*G at N = 16") {
  const auto c = pg_set(16);
  CHECK(c.K == 2);
  CHECK(c.t == 8);
  CHECK(c.P == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23});
  CHECK(c.G == ints({2, 4}));
  CHECK(c.A.size() == 16);
  CHECK(c.A == combine(FiniteRealSet::from_integers({3, 5, 7, 11, 13, 17, 19, 23}), c.G, SetOp::prod));
  const auto d = pg_set(16, 1);
  CHECK(d.A == dilate(FiniteRealSet::from_integers({3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}), 2));
  CHECK_THROWS_AS(pg_set(3), InvalidInput);
}

TEST_CASE("K is the smallest fourth root bound") {
  CHECK(pg_set(81).K == 3);
  CHECK(pg_set(82).K == 4);
  CHECK(pg_set(256).K == 4);
  CHECK(pg_set(257).K == 5);
}

TEST_CASE("fibers split subsets by 2-adic valuation") {
  const auto c = pg_set(64);
  const auto fibers = c.fibers(c.A);
  REQUIRE(fibers.size() == c.K);
  std::size_t total = 0;
  for (std::size_t j = 0; j < fibers.size(); ++j) {
    CHECK(fibers[j].size() == c.t);
    total += fibers[j].size();
  }
  CHECK(total == c.A.size());
  const auto half = sample_subset(c.A, Sampler::random_half, 3);
  std::size_t h = 0;
  for (const auto& f : c.fibers(half)) h += f.size();
  CHECK(h == half.size());
}

TEST_CASE("samplers") {
  const auto a = pg_set(64).A;
  CHECK(sample_subset(a, Sampler::full, 0) == a);
  const auto r = sample_subset(a, Sampler::random_half, 5);
  CHECK(r.size() == (a.size() + 1) / 2);
  CHECK(is_subset(r, a));
  CHECK(r == sample_subset(a, Sampler::random_half, 5));
  const auto adv = sample_subset(a, Sampler::adversarial_half, 0);
  CHECK(adv.size() == (a.size() + 1) / 2);
  CHECK(parse_sampler("adversarial_half") == Sampler::adversarial_half);
  CHECK_THROWS_AS(parse_sampler("most"), InvalidInput);
}

TEST_CASE("doubling audit") {
  const auto c = pg_set(64);
  const auto audit = mult_doubling_audit(c);
  CHECK(audit.value == higher_sumset_size(c.A, Sign::plus, Kind::multiplicative));
  CHECK(audit.value >= audit.product_set_size);
  CHECK(audit.product_set_size == combine(c.A, c.A, SetOp::prod).size());
  CHECK(audit.check.verdict == Verdict::holds);
}

TEST_CASE("exponent scan rows") {
  const auto s = exponent_scan({64, 128, 256}, Sampler::full);
  REQUIRE(s.rows.size() == 3);
  for (const auto& row : s.rows) {
    CHECK(row.fiber_ok);
    CHECK(row.e3_cs_ok);
    CHECK(row.size_B == row.size_A);
  }
  CHECK(s.rows[0].e3_add == energy_k(pg_set(64).A, 3, Kind::additive).value);
  CHECK(s.slope_add > 3.0);
  CHECK_THROWS_AS(exponent_scan({64}, Sampler::full), InvalidInput);
  CHECK_THROWS_AS(exponent_scan({128, 64}, Sampler::full), InvalidInput);
}

TEST_CASE("least squares slope") {
  CHECK(ols_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
  CHECK(ols_slope({0, 1, 2, 3}, {1, 1, 2, 2}) == doctest::Approx(0.4));
  CHECK_THROWS_AS(ols_slope({1, 1}, {2, 3}), InvalidInput);
}

TEST_CASE("multinomial identity") {
  const auto r = multinomial_identity(2, 2);
  CHECK(r.holds);
  CHECK(r.lhs[2] == 6);
  CHECK(multinomial_identity(2, 1).lhs[1] == 2);
  for (unsigned l = 1; l <= 3; ++l)
    for (unsigned k = 1; k <= 4; ++k) {
      const auto m = multinomial_identity(l, k);
      CHECK(m.holds);
      for (unsigned n = 0; n <= l * k; ++n) CHECK(m.lhs[n] == oracle::weight_tuples(l, k, n));
      CHECK(m.lhs[0] == 1);
    }
  CHECK_THROWS_AS(multinomial_identity(0, 2), InvalidInput);
  CHECK_THROWS_AS(multinomial_identity(6, 2), ResourceLimit);
}

}  // TEST_SUITE
