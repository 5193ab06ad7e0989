#include "permspec/generators.hpp"

#include <cmath>
#include <numeric>

#include "permspec/errors.hpp"

namespace permspec::generators {

ExamplePair make_pair(std::int64_t n, std::int64_t root_index) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("the pair is defined for odd n >= 3");
  if (root_index < 1 || root_index >= n || std::gcd(root_index, n) != 1)
    throw std::invalid_argument("root index must be in 1..n-1 and coprime to n");

  // Row p of the "column of roots": exp(2*pi*i * root_index * p / n), reduced
  // mod n before the trig call to keep large-n phases accurate.
  auto root = [&](std::int64_t p) {
    double angle = 2.0 * M_PI * static_cast<double>((p % n + n) % n) / static_cast<double>(n);
    return Complex{std::cos(angle), std::sin(angle)};
  };

  ComplexMatrix c(n);
  for (std::int64_t j = 0; j < n; ++j) c.at((j + 1) % n, j) = 1.0;

  ComplexMatrix d(n);
  for (std::int64_t i = 0; i < n; ++i) d.at(i, i) = root(root_index * (i + 1));

  return ExamplePair{n, std::move(c), std::move(d), root(root_index), root_index};
}

CommutatorCheck commutator_check(const ExamplePair& pair) {
  const auto& c = pair.c;
  const auto& d = pair.d;
  ComplexMatrix commutator = c.multiply(d).multiply(c.adjoint()).multiply(d.adjoint());
  Complex scalar = 1.0 / pair.lambda;
  double deviation = cmatrix::trace_norm(
      commutator.subtract(ComplexMatrix::identity(pair.n).scale(scalar)));
  double gap_norm = cmatrix::trace_norm(c.multiply(d).subtract(d.multiply(c)));
  return {scalar, deviation, gap_norm};
}

double product_charpoly_check(const ExamplePair& pair) {
  auto coeffs = cmatrix::char_poly(pair.c.multiply(pair.d));
  double residual = 0.0;
  for (std::int64_t k = 0; k <= pair.n; ++k) {
    Complex expected{0.0, 0.0};
    if (k == 0) expected = -1.0;
    if (k == pair.n) expected = 1.0;
    residual = std::max(residual, std::abs(coeffs[static_cast<std::size_t>(k)] - expected));
  }
  return residual;
}

MomentSequence hyperlinear_profile(const ExamplePair& pair, std::int64_t a, std::int64_t b,
                                   std::int64_t max_k) {
  if (a == 0 && b == 0) throw std::invalid_argument("the trivial word is excluded");
  if (std::abs(a) > kWordPowerCap || std::abs(b) > kWordPowerCap)
    throw std::invalid_argument("word powers exceed the sanity cap");

  const std::int64_t n = pair.n;
  ComplexMatrix ca(n);
  std::int64_t shift = ((a % n) + n) % n;
  for (std::int64_t j = 0; j < n; ++j) ca.at((j + shift) % n, j) = 1.0;

  // d^b stays exact: reduce the root-of-unity exponent mod n rather than
  // powering floating-point phases.
  ComplexMatrix db(n);
  for (std::int64_t i = 0; i < n; ++i) {
    __int128 e = static_cast<__int128>(pair.root_index) * (i + 1) * b;
    auto reduced = static_cast<std::int64_t>(((e % n) + n) % n);
    double angle = 2.0 * M_PI * static_cast<double>(reduced) / static_cast<double>(n);
    db.at(i, i) = Complex{std::cos(angle), std::sin(angle)};
  }

  return cmatrix::moment_sequence(ca.multiply(db), max_k);
}

}  // namespace permspec::generators
