#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "permspec/numtheory.hpp"
#include "permspec/rng.hpp"

using namespace permspec::numtheory;

TEST_CASE("factorize basics") {
  CHECK(factorize(1).primes.empty());
  CHECK(factorize(1).base == 1);

  auto f12 = factorize(12);
  REQUIRE(f12.primes.size() == 2);
  CHECK(f12.primes[0].prime == 2);
  CHECK(f12.primes[0].exponent == 2);
  CHECK(f12.primes[1].prime == 3);
  CHECK(f12.primes[1].exponent == 1);

  auto f360 = factorize(360);
  REQUIRE(f360.primes.size() == 3);
  CHECK(f360.primes[0].prime == 2);
  CHECK(f360.primes[0].exponent == 3);
  CHECK(f360.primes[1].prime == 3);
  CHECK(f360.primes[1].exponent == 2);
  CHECK(f360.primes[2].prime == 5);
  CHECK(f360.primes[2].exponent == 1);

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization reassembles and stays ordered") {
  for (std::int64_t i = 1; i <= 5000; ++i) {
    auto f = factorize(i);
    std::int64_t product = 1;
    std::int64_t last_prime = 0;
    for (const auto& [prime, exponent] : f.primes) {
      CHECK(prime > last_prime);
      last_prime = prime;
      for (int e = 0; e < exponent; ++e) product *= prime;
    }
    CHECK(product == i);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("divisors against plain enumeration") {
  for (std::int64_t i : {1, 2, 17, 36, 97, 360, 1024, 5040}) {
    std::vector<std::int64_t> expected;
    for (std::int64_t d = 1; d <= i; ++d)
      if (i % d == 0) expected.push_back(d);
    CHECK(divisors(i) == expected);
  }
}

TEST_CASE("divisor count matches the exponent product") {
  for (std::int64_t i = 1; i <= 3000; ++i) {
    std::int64_t expected = 1;
    for (const auto& pp : factorize(i).primes) expected *= pp.exponent + 1;
    CHECK(static_cast<std::int64_t>(divisors(i).size()) == expected);
  }
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(2) == -1);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("epsilon exponents on pinned inputs") {
  auto e1 = epsilon_exponents(1);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].exponent == 1);
  CHECK(e1[0].sign == 1);

  auto e6 = epsilon_exponents(6);
  REQUIRE(e6.size() == 4);
  CHECK(e6[0].exponent == 6);
  CHECK(e6[0].sign == 1);
  CHECK(e6[1].exponent == 3);
  CHECK(e6[1].sign == -1);
  CHECK(e6[2].exponent == 2);
  CHECK(e6[2].sign == -1);
  CHECK(e6[3].exponent == 1);
  CHECK(e6[3].sign == 1);

  // 12 = 2^2 * 3: enumerate eps in {0,1}^2 by hand.
  auto e12 = epsilon_exponents(12);
  REQUIRE(e12.size() == 4);
  CHECK(e12[0].exponent == 12);
  CHECK(e12[0].sign == 1);
  CHECK(e12[1].exponent == 6);
  CHECK(e12[1].sign == -1);
  CHECK(e12[2].exponent == 4);
  CHECK(e12[2].sign == -1);
  CHECK(e12[3].exponent == 2);
  CHECK(e12[3].sign == 1);
}

TEST_CASE("epsilon list structure") {
  for (std::int64_t i = 1; i <= 2000; ++i) {
    auto entries = epsilon_exponents(i);
    auto t = factorize(i).primes.size();
    CHECK(entries.size() == (std::size_t{1} << t));
    CHECK(entries[0].exponent == i);
    CHECK(entries[0].sign == 1);
    for (std::size_t a = 0; a < entries.size(); ++a) {
      CHECK(i % entries[a].exponent == 0);
      for (std::size_t b = a + 1; b < entries.size(); ++b)
        CHECK(entries[a].exponent != entries[b].exponent);
    }
  }
}

TEST_CASE("epsilon form equals mobius form for random integer f") {
  permspec::Rng rng(20240611);
  // f as a fixed random table over 1..10^4, regenerated per run from the seed.
  std::vector<std::int64_t> f(10001);
  for (auto& v : f) v = static_cast<std::int64_t>(rng.uniform_index(2001)) - 1000;

  for (std::int64_t i = 1; i <= 10000; ++i) {
    std::int64_t via_epsilon = 0;
    for (const auto& [exponent, sign] : epsilon_exponents(i))
      via_epsilon += sign * f[static_cast<std::size_t>(exponent)];
    std::int64_t via_mobius = 0;
    for (std::int64_t d : divisors(i))
      via_mobius += mobius(i / d) * f[static_cast<std::size_t>(d)];
    CHECK(via_epsilon == via_mobius);
  }
}
