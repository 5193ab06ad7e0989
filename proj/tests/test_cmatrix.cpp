#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "permspec/cmatrix.hpp"
#include "permspec/generators.hpp"

using namespace permspec;
using namespace permspec::cmatrix;
using permutations::Permutation;

namespace {

ComplexMatrix random_matrix(std::int64_t n, Rng& rng) {
  ComplexMatrix m(n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) m.at(i, j) = {rng.gaussian(), rng.gaussian()};
  return m;
}

}  // namespace

TEST_CASE("normalized trace") {
  CHECK(trace(ComplexMatrix::identity(7)) == Complex{1.0, 0.0});
  CHECK(trace(permutation_matrix(Permutation({1, 0}))) == Complex{0.0, 0.0});
  auto d = ComplexMatrix::diagonal({{1, 0}, {-1, 0}, {0, 1}});
  CHECK(std::abs(trace(d) - Complex{0.0, 1.0 / 3.0}) <= 1e-15);
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(ComplexMatrix::identity(17)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace_norm(ComplexMatrix(4)) == 0.0);
  ComplexMatrix ones(2);
  for (std::int64_t i = 0; i < 2; ++i)
    for (std::int64_t j = 0; j < 2; ++j) ones.at(i, j) = 1.0;
  CHECK(trace_norm(ones) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("trace norm squared equals trace of a*a") {
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_matrix(static_cast<std::int64_t>(rng.uniform_index(30)) + 1, rng);
    double norm2 = trace_norm(a) * trace_norm(a);
    auto gram = trace(a.adjoint().multiply(a));
    CHECK(std::abs(norm2 - gram.real()) <= 1e-12 * std::max(1.0, norm2));
    CHECK(std::abs(gram.imag()) <= 1e-12);
  }
}

TEST_CASE("moment sequences") {
  auto id_moments = moment_sequence(ComplexMatrix::identity(4), 5);
  for (std::int64_t k = 1; k <= 5; ++k) CHECK(id_moments.at(k) == Complex{1.0, 0.0});

  std::int64_t n = 6;
  std::vector<std::int64_t> image(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = (j + 1) % n;
  auto cycle_moments = moment_sequence(permutation_matrix(Permutation(image)), n);
  for (std::int64_t k = 1; k < n; ++k) CHECK(std::abs(cycle_moments.at(k)) <= 1e-15);
  CHECK(std::abs(cycle_moments.at(n) - Complex{1.0, 0.0}) <= 1e-15);

  auto pair = generators::make_pair(3);
  auto cd_moments = moment_sequence(pair.c.multiply(pair.d), 3);
  CHECK(std::abs(cd_moments.at(1)) <= 1e-14);
  CHECK(std::abs(cd_moments.at(2)) <= 1e-14);
  CHECK(std::abs(cd_moments.at(3) - Complex{1.0, 0.0}) <= 1e-14);
}

TEST_CASE("moment sequence refuses non-unitary input") {
  ComplexMatrix bad = ComplexMatrix::identity(3);
  bad.at(0, 0) = 2.0;
  CHECK_THROWS_AS(moment_sequence(bad, 4), NotUnitaryError);
  try {
    moment_sequence(bad, 4);
  } catch (const NotUnitaryError& e) {
    CHECK(e.defect > 1.0);  // ||diag(3,0,0)||_2 = sqrt(3)
  }
}

TEST_CASE("characteristic polynomial, pinned") {
  auto id2 = char_poly(ComplexMatrix::identity(2));  // X^2 - 2X + 1
  REQUIRE(id2.size() == 3);
  CHECK(std::abs(id2[0] - Complex{1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(id2[1] - Complex{-2.0, 0.0}) <= 1e-12);
  CHECK(id2[2] == Complex{1.0, 0.0});

  auto pair = generators::make_pair(3);
  auto cd = char_poly(pair.c.multiply(pair.d));  // X^3 - 1
  CHECK(std::abs(cd[0] - Complex{-1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(cd[1]) <= 1e-12);
  CHECK(std::abs(cd[2]) <= 1e-12);
  CHECK(cd[3] == Complex{1.0, 0.0});

  // type {2:1, 1:1}: (X^2-1)(X-1) = X^3 - X^2 - X + 1
  auto p = char_poly(permutation_matrix(Permutation({1, 0, 2})));
  CHECK(std::abs(p[0] - Complex{1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(p[1] - Complex{-1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(p[2] - Complex{-1.0, 0.0}) <= 1e-12);
  CHECK(p[3] == Complex{1.0, 0.0});
}

TEST_CASE("characteristic polynomial matches the exact product oracle") {
  Rng rng(404);
  for (int rep = 0; rep < 12; ++rep) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(100)) + 2;
    auto p = permutations::random_permutation(n, rng);
    auto type = permutations::cycle_type(p);
    auto expected = testutil::charpoly_of_type(type);
    auto got = char_poly(permutation_matrix(p));
    REQUIRE(got.size() == expected.size());
    for (std::size_t d = 0; d < got.size(); ++d) {
      CHECK(std::abs(got[d].real() - static_cast<double>(expected[d])) <= 1e-9);
      CHECK(std::abs(got[d].imag()) <= 1e-9);
    }
  }
}

TEST_CASE("permutation matrices") {
  CHECK(trace(permutation_matrix(Permutation::identity(5))) == Complex{1.0, 0.0});

  auto swap2 = permutation_matrix(Permutation({1, 0}));
  CHECK(swap2.at(0, 0) == Complex{0.0, 0.0});
  CHECK(swap2.at(0, 1) == Complex{1.0, 0.0});
  CHECK(swap2.at(1, 0) == Complex{1.0, 0.0});
  CHECK(swap2.at(1, 1) == Complex{0.0, 0.0});

  auto c3 = permutation_matrix(Permutation({1, 2, 0}));
  CHECK(c3.at(1, 0) == Complex{1.0, 0.0});
  CHECK(c3.at(2, 1) == Complex{1.0, 0.0});
  CHECK(c3.at(0, 2) == Complex{1.0, 0.0});

  Rng rng(1);
  for (int rep = 0; rep < 10; ++rep) {
    auto p = permutations::random_permutation(
        static_cast<std::int64_t>(rng.uniform_index(100)) + 1, rng);
    CHECK(unitarity_defect(permutation_matrix(p)) <= 1e-14);
  }
}

TEST_CASE("random unitary conjugation") {
  auto id = ComplexMatrix::identity(6);
  auto conj_id = conjugate_by_random_unitary(id, 99);
  CHECK(trace_norm(conj_id.subtract(id)) <= 1e-12);

  Rng rng(2718);
  for (std::uint64_t seed : {1ull, 7ull, 31173ull}) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(60)) + 2;
    auto p = permutations::random_permutation(n, rng);
    auto u = permutation_matrix(p);
    auto v = conjugate_by_random_unitary(u, seed);
    CHECK(unitarity_defect(v) <= 1e-12);
    auto mu = moment_sequence(u, 12);
    auto mv = moment_sequence(v, 12);
    for (std::int64_t k = 1; k <= 12; ++k) CHECK(std::abs(mu.at(k) - mv.at(k)) <= 1e-9);
  }

  // determinism per seed
  auto a = conjugate_by_random_unitary(ComplexMatrix::identity(4), 5);
  auto b = conjugate_by_random_unitary(ComplexMatrix::identity(4), 5);
  CHECK(trace_norm(a.subtract(b)) == 0.0);
}
