#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "permspec/cmatrix.hpp"
#include "permspec/errors.hpp"
#include "permspec/permutation.hpp"

using namespace permspec;
using namespace permspec::permutations;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
  CHECK_THROWS_AS(Permutation({}), Error);
  CHECK(Permutation::identity(4) == Permutation({0, 1, 2, 3}));
}

TEST_CASE("cycle type") {
  auto t_id = cycle_type(Permutation::identity(5));
  CHECK(t_id.counts == std::map<std::int64_t, std::int64_t>{{1, 5}});

  auto t = cycle_type(Permutation({1, 2, 0, 4, 3}));
  CHECK(t.counts == std::map<std::int64_t, std::int64_t>{{2, 1}, {3, 1}});

  // A randomized 4-cycle with two fixed points keeps its type.
  Rng rng(77);
  CycleType wanted{6, {{4, 1}, {1, 2}}};
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_permutation_with_type(wanted, rng);
    CHECK(cycle_type(p).counts == wanted.counts);
  }
}

TEST_CASE("densities of a type") {
  auto d = densities_of(CycleType{4, {{1, 2}, {2, 1}}});
  CHECK(d.values.at(1) == Rational(1, 2));
  CHECK(d.values.at(2) == Rational(1, 2));
  CHECK(*d.c_inf == Rational(0));

  CHECK(densities_of(CycleType{3, {{3, 1}}}).values.at(3) == Rational(1));

  auto d2 = densities_of(CycleType{20, {{5, 2}, {2, 3}, {1, 4}}});
  CHECK(d2.values.at(5) == Rational(1, 2));
  CHECK(d2.values.at(2) == Rational(3, 10));
  CHECK(d2.values.at(1) == Rational(1, 5));
  CHECK(d2.sum() == Rational(1));
}

TEST_CASE("densities of random permutations sum to one exactly") {
  Rng rng(123);
  for (int rep = 0; rep < 50; ++rep) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(300)) + 1;
    auto p = random_permutation(n, rng);
    CHECK(densities_of(cycle_type(p)).sum() == Rational(1));
  }
}

TEST_CASE("trace power on pinned types") {
  CycleType transposition{2, {{2, 1}}};
  CHECK(trace_power(transposition, 1) == Rational(0));
  CHECK(trace_power(transposition, 2) == Rational(1));

  CycleType t6{6, {{3, 1}, {2, 1}, {1, 1}}};
  CHECK(trace_power(t6, 6) == Rational(1));

  // Squaring a 4-cycle leaves no fixed points; the 2-cycle contributes two.
  CycleType t42{6, {{4, 1}, {2, 1}}};
  CHECK(trace_power(t42, 2) == Rational(1, 3));
}

TEST_CASE("trace power agrees with the matrix power oracle") {
  Rng rng(2024);
  for (int rep = 0; rep < 8; ++rep) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(40)) + 2;
    auto p = random_permutation(n, rng);
    auto type = cycle_type(p);
    auto moments = cmatrix::moment_sequence(cmatrix::permutation_matrix(p), 20);
    for (std::int64_t k = 1; k <= 20; ++k) {
      CHECK(std::abs(moments.at(k).real() - trace_power(type, k).to_double()) <= 1e-12);
      CHECK(std::abs(moments.at(k).imag()) <= 1e-12);
      // and against the plain point-walking count
      CHECK(trace_power(type, k).to_double() ==
            doctest::Approx(testutil::trace_power_walk(p, k)).epsilon(1e-14));
    }
  }
}

TEST_CASE("prime-power trace inequalities hold exactly") {
  Rng rng(31337);
  for (int rep = 0; rep < 100; ++rep) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(200)) + 2;
    auto type = testutil::random_cycle_type(n, rng);
    for (std::int64_t q : {2, 3, 5, 7, 11, 13})
      CHECK(trace_power(type, q) >= trace_power(type, 1));
    Rational lhs = trace_power(type, 6);
    Rational rhs = trace_power(type, 3) + trace_power(type, 2) - trace_power(type, 1);
    CHECK(lhs >= rhs);
  }
}

TEST_CASE("compose, inverse, power") {
  Rng rng(5);
  auto p = random_permutation(12, rng);
  CHECK(p.compose(p.inverse()) == Permutation::identity(12));
  CHECK(p.inverse().compose(p) == Permutation::identity(12));

  Permutation three_cycle({1, 2, 0});
  CHECK(three_cycle.power(3) == Permutation::identity(3));

  Permutation four_cycle({1, 2, 3, 0});
  CHECK(four_cycle.power(2) == Permutation({2, 3, 0, 1}));

  CHECK_THROWS_AS(three_cycle.compose(four_cycle), DimensionMismatchError);

  // power by cycle reduction matches stepwise composition, including huge k
  auto q = random_permutation(30, rng);
  Permutation acc = Permutation::identity(30);
  for (std::int64_t k = 1; k <= 24; ++k) {
    acc = q.compose(acc);
    CHECK(q.power(k) == acc);
  }
  CHECK(q.power(0) == Permutation::identity(30));
  CHECK(q.power(-1) == q.inverse());
  const std::int64_t order_multiple = 2329089562800;  // lcm(1..30)
  CHECK(q.power(17 + order_multiple) == q.power(17));
  CHECK(q.power(-5) == q.power(order_multiple - 5));
}

TEST_CASE("construct permutation on pinned targets") {
  CycleDensities half_twos;
  half_twos.values[2] = Rational(1, 2);
  auto r = construct_permutation(half_twos, 7);
  CHECK(r.cycle_counts.at(2) == 1);
  CHECK(r.leftover_length == 5);
  CHECK_FALSE(r.leftover_collision);
  auto type = cycle_type(r.permutation);
  CHECK(type.counts == std::map<std::int64_t, std::int64_t>{{2, 1}, {5, 1}});
  CHECK(r.achieved.values.at(2) == Rational(2, 7));

  CycleDensities all_fixed;
  all_fixed.values[1] = Rational(1);
  CHECK(construct_permutation(all_fixed, 10).permutation == Permutation::identity(10));

  CycleDensities empty;
  auto full = construct_permutation(empty, 8);
  CHECK(full.leftover_length == 8);
  CHECK(cycle_type(full.permutation).counts == std::map<std::int64_t, std::int64_t>{{8, 1}});

  // leftover length colliding with a requested length is flagged
  CycleDensities half_fours;
  half_fours.values[4] = Rational(1, 2);
  auto collided = construct_permutation(half_fours, 8);
  CHECK(collided.leftover_length == 4);
  CHECK(collided.leftover_collision);
  CHECK(collided.cycle_counts.at(4) == 1);
  CHECK(cycle_type(collided.permutation).counts ==
        std::map<std::int64_t, std::int64_t>{{4, 2}});
  CHECK(collided.achieved.values.at(4) == Rational(1));
}

TEST_CASE("construct rejects bad targets") {
  CycleDensities negative;
  negative.values[2] = Rational(-1, 4);
  CHECK_THROWS_AS(construct_permutation(negative, 8), InvalidDensitiesError);

  CycleDensities too_much;
  too_much.values[1] = Rational(7, 10);
  too_much.values[2] = Rational(7, 10);
  CHECK_THROWS_AS(construct_permutation(too_much, 8), InvalidDensitiesError);
}

TEST_CASE("construct floor counts and density gap") {
  Rng rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(400)) + 5;
    CycleDensities target;
    // up to three requested lengths with total mass <= 1
    std::int64_t denominator = 8;
    std::int64_t budget = denominator;
    for (std::int64_t i : {2, 3, 5}) {
      if (budget == 0) break;
      auto share = static_cast<std::int64_t>(rng.uniform_index(static_cast<std::uint64_t>(budget + 1)));
      if (share > 0) target.values[i] = Rational(share, denominator);
      budget -= share;
    }
    auto r = construct_permutation(target, n);
    auto type = cycle_type(r.permutation);
    for (const auto& [i, c] : target.values) {
      std::int64_t expected = (c * Rational(n) / Rational(i)).floor();
      std::int64_t got = type.counts.count(i) ? type.counts.at(i) : 0;
      if (r.leftover_collision && r.leftover_length == i) {
        CHECK(got == expected + 1);
      } else {
        CHECK(got == expected);
      }
      CHECK(r.cycle_counts.at(i) == expected);
      // |cyc_i - c_i| <= i/n, leftover collision adding at most another i/n
      Rational achieved = r.achieved.values.count(i) ? r.achieved.values.at(i) : Rational(0);
      Rational gap = achieved < c ? c - achieved : achieved - c;
      CHECK(gap <= Rational(i * (r.leftover_collision ? 2 : 1), n));
    }
  }
}

TEST_CASE("one-line format round trips") {
  Rng rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_permutation(static_cast<std::int64_t>(rng.uniform_index(50)) + 1, rng);
    CHECK(parse_permutation(format_permutation(p)) == p);
  }
  CHECK(format_permutation(Permutation({1, 0, 2})) == "1 0 2");
  CHECK_THROWS_AS(parse_permutation("0 1 x"), ParseError);
  CHECK_THROWS_AS(parse_permutation("0 0"), ParseError);
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
}
