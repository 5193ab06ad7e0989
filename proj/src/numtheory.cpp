#include "permspec/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace permspec::numtheory {

namespace {

void require_positive(std::int64_t i) {
  if (i < 1) throw std::invalid_argument("argument must be a positive integer");
}

}  // namespace

Factorization factorize(std::int64_t i) {
  require_positive(i);
  Factorization f{i, {}};
  std::int64_t rest = i;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    f.primes.push_back({p, r});
  }
  if (rest > 1) f.primes.push_back({rest, 1});
  return f;
}

std::vector<std::int64_t> divisors(std::int64_t i) {
  require_positive(i);
  std::vector<std::int64_t> ds{1};
  for (const auto& [prime, exponent] : factorize(i).primes) {
    std::size_t before = ds.size();
    std::int64_t pk = 1;
    for (int e = 1; e <= exponent; ++e) {
      pk *= prime;
      for (std::size_t j = 0; j < before; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int mobius(std::int64_t i) {
  require_positive(i);
  auto f = factorize(i);
  for (const auto& pp : f.primes)
    if (pp.exponent >= 2) return 0;
  return f.primes.size() % 2 == 0 ? 1 : -1;
}

std::vector<SignedExponent> epsilon_exponents(std::int64_t i) {
  require_positive(i);
  auto f = factorize(i);
  auto t = f.primes.size();
  std::vector<SignedExponent> out;
  out.reserve(std::size_t{1} << t);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    std::int64_t e = i;
    int sign = 1;
    for (std::size_t j = 0; j < t; ++j) {
      if (mask & (std::uint64_t{1} << j)) {
        e /= f.primes[j].prime;
        sign = -sign;
      }
    }
    out.push_back({e, sign});
  }
  return out;
}

}  // namespace permspec::numtheory
