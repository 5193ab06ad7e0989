#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "permspec/io.hpp"

using namespace permspec;
using namespace permspec::io;

TEST_CASE("matrix json round trip") {
  Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    auto n = static_cast<std::int64_t>(rng.uniform_index(12)) + 1;
    cmatrix::ComplexMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j) m.at(i, j) = {rng.gaussian(), rng.gaussian()};
    auto back = matrix_from_json(parse_json(matrix_to_json(m).dump()));
    REQUIRE(back.dim() == n);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j) CHECK(back.at(i, j) == m.at(i, j));
  }
}

TEST_CASE("matrix json rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":2,"re":[[1,0]],"im":[[0,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"re":[[1]],"im":[[0]]})")), ParseError);
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("matrix input promotion") {
  auto input = parse_matrix_input("1 2 0");
  REQUIRE(std::holds_alternative<permutations::Permutation>(input));
  CHECK(std::get<permutations::Permutation>(input) == permutations::Permutation({1, 2, 0}));

  auto mjson = matrix_to_json(cmatrix::ComplexMatrix::identity(2)).dump();
  auto input2 = parse_matrix_input(mjson);
  CHECK(std::holds_alternative<cmatrix::ComplexMatrix>(input2));
}

TEST_CASE("moment json round trip and sanity bound") {
  MomentSequence m;
  m.values = {{0.5, 0.0}, {-0.25, 0.125}, {1.0, 0.0}};
  auto back = moments_from_json(parse_json(moments_to_json(m).dump()));
  REQUIRE(back.max_k() == 3);
  for (std::int64_t k = 1; k <= 3; ++k) CHECK(back.at(k) == m.at(k));

  CHECK_THROWS_AS(moments_from_json(parse_json(R"({"K":1,"re":[1.5],"im":[0.0]})")), ParseError);
  CHECK_THROWS_AS(moments_from_json(parse_json(R"({"K":2,"re":[1.0],"im":[0.0,0.0]})")),
                  ParseError);
}

TEST_CASE("measure json round trip") {
  measures::CircleMeasure mu;
  mu.coefficients[2] = 0.25;
  mu.coefficients[5] = 0.5;
  mu.lebesgue_weight = 0.25;
  auto back = measure_from_json(parse_json(measure_to_json(mu).dump()));
  CHECK(back.coefficients == mu.coefficients);
  CHECK(back.lebesgue_weight == mu.lebesgue_weight);

  CHECK_THROWS_AS(measure_from_json(parse_json(R"({"coeffs":{"2":0.5},"inf":0.0})")),
                  InvalidDensitiesError);  // mass 0.5
  CHECK_THROWS_AS(measure_from_json(parse_json(R"({"coeffs":{"0":1.0},"inf":0.0})")),
                  ParseError);
}

TEST_CASE("densities literal") {
  auto d = parse_densities_spec("2:0.5,3:1/4");
  CHECK(d.values.at(2) == Rational(1, 2));
  CHECK(d.values.at(3) == Rational(1, 4));

  CHECK(parse_densities_spec("").values.empty());
  CHECK(parse_densities_spec("1:1").values.at(1) == Rational(1));
  CHECK(parse_densities_spec("7:2.5e-1").values.at(7) == Rational(1, 4));

  CHECK_THROWS_AS(parse_densities_spec("2:0.5,2:0.1"), ParseError);
  CHECK_THROWS_AS(parse_densities_spec("x:1"), ParseError);
  CHECK_THROWS_AS(parse_densities_spec("2=0.5"), ParseError);
  CHECK_THROWS_AS(parse_densities_spec("0:1"), ParseError);
}

TEST_CASE("histogram csv shape") {
  std::vector<measures::HistogramBin> bins{{0.0, 1.0, 0.5}, {1.0, 2.0, 0.5}};
  auto csv = histogram_to_csv(bins);
  CHECK(csv == "bin_start_radians,bin_end_radians,mass\n0,1,0.5\n1,2,0.5\n");
}

TEST_CASE("cycle type and densities json") {
  permutations::CycleType t{6, {{3, 1}, {2, 1}, {1, 1}}};
  CHECK(cycle_type_to_json(t).dump() == R"({"1":1,"2":1,"3":1})");

  permutations::RealCycleDensities d;
  d.values[1] = 0.5;
  d.values[4] = 0.5;
  auto j = densities_to_json(d);
  CHECK(j["values"]["1"] == 0.5);
  CHECK(j["values"]["4"] == 0.5);
  CHECK(j["inf"].is_null());
}
