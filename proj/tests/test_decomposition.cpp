#include <doctest.h>

#include "addcomb/decomposition.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/parallel.hpp"
#include "addcomb/report.hpp"
#include "helpers.hpp"

using namespace addcomb;
using testing::ints;

namespace {

bool is_partition(const FiniteRealSet& a, const FiniteRealSet& b, const FiniteRealSet& c) {
  return set_intersection(b, c).empty() && set_union(b, c) == a;
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("stop test with automatic M") {
  SplitConfig cfg;
  // 1/M = |A|^{-2/5}; for |A| = 32 that is exactly 1/4.
  CHECK(passes_stop_test(Rational(1, 3), cfg, 32));
  CHECK_FALSE(passes_stop_test(Rational(1, 4), cfg, 32));
  cfg.M = Rational(2);
  CHECK(passes_stop_test(Rational(3, 4), cfg, 32));
  CHECK_FALSE(passes_stop_test(Rational(1, 2), cfg, 32));
}

TEST_CASE("a geometric progression has a multiplicative witness") {
  const auto gp = geometric_progression(32);
  const auto w = find_witness(gp, Kind::multiplicative, {});
  REQUIRE(w.has_value());
  CHECK(w->score > 0);
  CHECK(w->S_tau.contains(Rational(1)));
  const auto e = dyadic_extract(gp, *w);
  CHECK(!e.piece.empty());
  CHECK(is_subset(e.piece, gp));
  CHECK(e.total >= w->tau * BigInt(w->S_tau.size()));
  CHECK(e.q == (e.cls == 0 ? Rational(1, 2) : Rational(BigInt(1) << (e.cls - 1))));
}

TEST_CASE("degenerate witness is rejected") {
  const auto gp = geometric_progression(8);
  Witness w;
  w.G = ints({1});
  w.S_tau = ints({1000});
  CHECK_THROWS_AS(dyadic_extract(gp, w), InvalidInput);
}

TEST_CASE("split of a geometric progression") {
  const auto gp = geometric_progression(64);
  const auto t = balog_wooley_split(gp);
  CHECK(is_partition(gp, t.B, t.C));
  CHECK(!t.rounds.empty());
  CHECK(t.certificate.all_hold());
  CHECK(t.frame == "A");
  CHECK(t.certificate.rows.size() == 6);
  for (const auto& r : t.rounds) CHECK(r.piece_size_ok);
}

TEST_CASE("split of an arithmetic progression keeps it in C") {
  const auto ap = arithmetic_progression(64);
  const auto t = balog_wooley_split(ap);
  CHECK(t.rounds.empty());
  CHECK(t.C == ap);
  CHECK(t.certificate.all_hold());
}

TEST_CASE("split preconditions") {
  CHECK_THROWS_AS(balog_wooley_split(ints({0, 1, 2})), InvalidInput);
  CHECK_THROWS_AS(balog_wooley_split(ints({3})), InvalidInput);
  CHECK_THROWS_AS(certify_split(ints({1, 2}), ints({1}), ints({1})), InvalidInput);
  CHECK_THROWS_AS(shifted_split(ints({1, 2, 3}), 0, ShiftMode::mult_shift), InvalidInput);
  CHECK_THROWS_AS(ratio_split(ints({1, 2})), InvalidInput);
}

TEST_CASE("round guard aborts with the partial trace") {
  SplitConfig cfg;
  cfg.max_rounds = 1;
  try {
    balog_wooley_split(geometric_progression(256), cfg);
    FAIL("expected SplitAborted");
  } catch (const SplitAborted& e) {
    CHECK(e.partial().rounds.size() == 1);
  }
}

TEST_CASE("traces are byte-identical across reruns and thread counts") {
  const auto a = set_union(arithmetic_progression(40), geometric_progression(40));
  const std::string first = dump(to_json(balog_wooley_split(a)));
  CHECK(dump(to_json(balog_wooley_split(a))) == first);
  set_thread_count(3);
  const std::string threaded = dump(to_json(balog_wooley_split(a)));
  set_thread_count(1);
  CHECK(threaded == first);
}

TEST_CASE("shifted frames partition the input") {
  const auto gp = geometric_progression(32);
  const auto m = shifted_split(gp, 1, ShiftMode::mult_shift);
  CHECK(is_partition(gp, m.B, m.C));
  CHECK(m.frame == "A+1");
  const auto ap = arithmetic_progression(32);
  const auto s = shifted_split(ap, 1, ShiftMode::add_scale);
  CHECK(is_partition(ap, s.B, s.C));
  CHECK(s.witness_kind == Kind::additive);
}

TEST_CASE("ratio split") {
  const auto a = ints({-3, 0, 1, 4, 9});
  const auto r = ratio_split(a);
  CHECK(r.R == ratio_set(a));
  CHECK(r.reflection_ok);
  CHECK(r.inversion_ok);
  CHECK(r.sizes_ok);
  CHECK(2 * r.R1.size() >= r.R.size());
  CHECK(2 * r.R2.size() >= r.R.size());
}

}  // TEST_SUITE
