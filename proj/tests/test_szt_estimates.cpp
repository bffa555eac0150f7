#include <doctest.h>

#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/estimates.hpp"
#include "addcomb/generators.hpp"
#include "helpers.hpp"

using namespace addcomb;
using testing::ints;

TEST_SUITE("szt-estimates") {

TEST_CASE("candidate family is deterministic and starts with A") {
  const auto a = arithmetic_progression(40);
  const auto f1 = candidate_family(a, {}), f2 = candidate_family(a, {});
  REQUIRE(!f1.members.empty());
  CHECK(f1.members[0] == a);
  CHECK(f1.tags[0] == "self");
  CHECK(f1.members == f2.members);
  CHECK(f1.tags == f2.tags);
  FamilyConfig other;
  other.seed = 99;
  CHECK(candidate_family(a, other).members != f1.members);
  for (std::size_t i = 0; i < f1.members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(f1.members[i] != f1.members[j]);
}

TEST_CASE("singleton collapses every bracket") {
  const auto a = ints({7});
  const auto fam = candidate_family(a);
  for (Kind k : {Kind::additive, Kind::multiplicative}) {
    const auto q = q_interval(a, fam, k);
    CHECK(q.lower == 1);
    CHECK(q.upper == 1);
    const auto d = d_sandwich(a, fam, k);
    CHECK(d.lower == 1);
    CHECK(d.upper == 1);
  }
}

TEST_CASE("q brackets on progressions") {
  const auto ap = arithmetic_progression(64), gp = geometric_progression(64);
  const auto qa = q_interval(ap, candidate_family(ap), Kind::additive);
  const auto qg = q_interval(gp, candidate_family(gp), Kind::multiplicative);
  // E3 of a 64-term progression over |A|^3.
  const Rational e3_over_n3(energy_k(ap, 3, Kind::additive).value, BigInt(64 * 64 * 64));
  CHECK(qa.lower >= e3_over_n3);
  CHECK(qa.lower >= 16);
  CHECK(qg.lower >= 16);
  CHECK(qa.upper <= 64);
  CHECK(qa.upper_source == UpperSource::cauchy_schwarz_E3);
  // Random set: additive structure is weak.
  Rng rng(1);
  const auto r = random_integer_set(rng, 64, 1, 1 << 20);
  const auto qr = q_interval(r, candidate_family(r), Kind::additive);
  CHECK(qr.lower < 4);
  CHECK(qr.lower >= 1);
}

TEST_CASE("D sandwich is flagged heuristic") {
  const auto a = geometric_progression(32);
  const auto d = d_sandwich(a, candidate_family(a), Kind::multiplicative);
  CHECK(d.heuristic_lower);
  CHECK(d.lower <= d.upper);
  CHECK(d.quantity == "D");
}

TEST_CASE("Sym cover witnesses") {
  const auto one = ints({1});
  CHECK(d_cover_upper(one, SymCoverWitness{one, one, 1, Kind::multiplicative}) == 1);
  const auto a = ints({1, 2, 3, 5});
  for (Kind k : {Kind::additive, Kind::multiplicative}) {
    const auto ws = universal_witnesses(a, k);
    REQUIRE(ws.size() == 2);
    CHECK(d_cover_upper(a, ws[0]) == 4);
    const auto aa = combine(a, a, k == Kind::additive ? SetOp::sum : SetOp::prod);
    const Rational n = aa.size();
    CHECK(d_cover_upper(a, ws[1]) == n * n / 16);
  }
  // An uncovered point, a zero in Q, a short witness and t <= 0 are all rejected.
  CHECK_THROWS_AS(d_cover_upper(a, SymCoverWitness{ints({1}), ints({1}), 1, Kind::additive}), InvalidInput);
  CHECK_THROWS_AS(d_cover_upper(ints({0}), SymCoverWitness{ints({0}), ints({0}), 1, Kind::additive}), InvalidInput);
  CHECK_THROWS_AS(d_cover_upper(a, SymCoverWitness{ints({1, 2}), ints({1}), 1, Kind::additive}), InvalidInput);
  CHECK_THROWS_AS(d_cover_upper(a, SymCoverWitness{a, a, 0, Kind::multiplicative}), InvalidInput);
  CHECK_THROWS_AS(universal_witnesses(ints({0, 1}), Kind::multiplicative), InvalidInput);
}

TEST_CASE("d* and the dd bound") {
  const auto a = arithmetic_progression(32);
  const auto fam = candidate_family(a);
  const auto dp = d_star(a, fam, Kind::additive), dx = d_star(a, fam, Kind::multiplicative);
  CHECK(dp.value <= 32);
  CHECK(dx.value <= 32);
  CHECK(dx.value < dp.value);  // an AP has small sumset
  const auto r = dd_check(a, fam, Slack{4, 2});
  CHECK(r.holds);
  CHECK(r.size == 32);
  CHECK_THROWS_AS(dd_check(ints({0, 1, 2}), candidate_family(ints({0, 1, 2}))), InvalidInput);
}

TEST_CASE("generalized sigma bounds") {
  const auto a = ints({13});
  const auto g = gen_sigma_check(a, a, Kind::additive);
  CHECK(g.certified);
  CHECK(g.e2_ratio <= 1.0);
  CHECK(g.e3_ratio <= 1.0);
  const auto ap = arithmetic_progression(48);
  CHECK(gen_sigma_check(ap, arithmetic_progression(12), Kind::additive).certified);
}

}  // TEST_SUITE
