#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "permspec/errors.hpp"
#include "permspec/rational.hpp"

namespace permspec {

/// Normalized trace moments m_1..m_K of a unitary, the conjugacy invariant.
struct MomentSequence {
  std::vector<std::complex<double>> values;

  std::int64_t max_k() const { return static_cast<std::int64_t>(values.size()); }

  std::complex<double> at(std::int64_t k) const {
    if (k < 1 || k > max_k())
      throw InsufficientMomentsError(k, k, max_k());
    return values[static_cast<std::size_t>(k - 1)];
  }
};

/// Same sequence over exact rationals (always real; permutation data).
struct ExactMomentSequence {
  std::vector<Rational> values;

  std::int64_t max_k() const { return static_cast<std::int64_t>(values.size()); }

  Rational at(std::int64_t k) const {
    if (k < 1 || k > max_k())
      throw InsufficientMomentsError(k, k, max_k());
    return values[static_cast<std::size_t>(k - 1)];
  }

  MomentSequence to_float() const {
    MomentSequence m;
    m.values.reserve(values.size());
    for (const auto& v : values) m.values.emplace_back(v.to_double(), 0.0);
    return m;
  }
};

/// Effective tolerance for float comparisons at problem size (n, K); the base
/// widens with the accumulation depth of the computation that produced the
/// data.
inline double scaled_tolerance(double base, std::int64_t n, std::int64_t max_k) {
  return base * (1.0 + 1e-12 * static_cast<double>(n) * static_cast<double>(max_k));
}

}  // namespace permspec
