#pragma once

#include <cstdint>

#include "permspec/cmatrix.hpp"
#include "permspec/moments.hpp"

namespace permspec::generators {

using cmatrix::Complex;
using cmatrix::ComplexMatrix;

/// The almost-commuting pair on odd n: c the cyclic shift j -> j+1 (mod n),
/// d the diagonal of consecutive powers of a primitive n-th root of unity
/// lambda, with d(i,i) = lambda^{i+1} so that d = diag(lambda, .., lambda^n).
/// cd has characteristic polynomial X^n - 1 (this needs n odd), while the
/// commutator c d c^-1 d^-1 is the scalar lambda^-1.
struct ExamplePair {
  std::int64_t n;
  ComplexMatrix c;
  ComplexMatrix d;
  Complex lambda;
  std::int64_t root_index;  // lambda = exp(2*pi*i*root_index/n)
};

/// n must be odd and >= 3; root_index must be coprime to n (so lambda stays
/// primitive). Default root_index 1 gives the first root of unity past 1.
ExamplePair make_pair(std::int64_t n, std::int64_t root_index = 1);

struct CommutatorCheck {
  Complex scalar;      // lambda^-1
  double deviation;    // || c d c^-1 d^-1 - scalar*Id ||_2
  double gap_norm;     // || cd - dc ||_2, equals |1 - lambda| = 2 sin(pi/n) at root_index 1
};

CommutatorCheck commutator_check(const ExamplePair& pair);

/// Max coefficient deviation of char_poly(c*d) from X^n - 1.
double product_charpoly_check(const ExamplePair& pair);

inline constexpr std::int64_t kWordPowerCap = 1'000'000;

/// Moments of the word c^a d^b, (a, b) != (0, 0), |a|,|b| <= kWordPowerCap.
/// The trace profile of the underlying rank-2 free abelian word map: every
/// moment vanishes unless the corresponding power word is trivial mod n.
MomentSequence hyperlinear_profile(const ExamplePair& pair, std::int64_t a, std::int64_t b,
                                   std::int64_t max_k);

}  // namespace permspec::generators
