#pragma once

#include <cstdint>
#include <vector>

namespace permspec::numtheory {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Prime decomposition of a positive integer. Empty prime list for 1.
struct Factorization {
  std::int64_t base;
  std::vector<PrimePower> primes;  // strictly increasing primes, exponents >= 1
};

/// Trial division; inputs here are bounded by matrix dimensions.
Factorization factorize(std::int64_t i);

/// All divisors, ascending, including 1 and i.
std::vector<std::int64_t> divisors(std::int64_t i);

/// Moebius function: 1 for i=1, (-1)^t for a product of t distinct primes,
/// 0 when any square divides i.
int mobius(std::int64_t i);

struct SignedExponent {
  std::int64_t exponent;
  int sign;  // +1 or -1
};

/// The 2^t exponents a_1^{r_1-e_1}...a_t^{r_t-e_t} over e in {0,1}^t, each
/// with sign (-1)^{e_1+...+e_t}. First entry is (i, +1); exponents are
/// pairwise distinct divisors of i. Summing sign * f(exponent) over the list
/// is the same linear form as summing mobius(i/d) * f(d) over divisors d | i;
/// both are exposed so tests can cross-check one against the other.
std::vector<SignedExponent> epsilon_exponents(std::int64_t i);

}  // namespace permspec::numtheory
