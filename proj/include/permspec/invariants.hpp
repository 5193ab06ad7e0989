#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permspec/cmatrix.hpp"
#include "permspec/moments.hpp"
#include "permspec/numtheory.hpp"
#include "permspec/permutation.hpp"

namespace permspec::invariants {

using permutations::CycleDensities;
using permutations::CycleType;
using permutations::Permutation;
using permutations::RealCycleDensities;

/// Signed divisor-sum inversion of a single index: c_i as the alternating sum
/// of moments at the exponents a_1^{r_1-e_1}...a_t^{r_t-e_t}. `moment_at` maps
/// a positive exponent to a scalar.
template <class Scalar, class MomentAt>
Scalar invert_single(std::int64_t i, MomentAt&& moment_at) {
  Scalar acc{};
  for (const auto& [exponent, sign] : numtheory::epsilon_exponents(i)) {
    if (sign > 0)
      acc += moment_at(exponent);
    else
      acc -= moment_at(exponent);
  }
  return acc;
}

/// Same linear form via the Moebius function over the divisor lattice,
/// c_i = sum_{d|i} mobius(i/d) m_d. Kept as a first-class alternative so the
/// two routes can be checked against each other.
template <class Scalar, class MomentAt>
Scalar invert_single_mobius(std::int64_t i, MomentAt&& moment_at) {
  Scalar acc{};
  for (std::int64_t d : numtheory::divisors(i)) {
    int mu = numtheory::mobius(i / d);
    if (mu == 1)
      acc += moment_at(d);
    else if (mu == -1)
      acc -= moment_at(d);
  }
  return acc;
}

/// Recovers c_1..c_upto from float moments. Every exponent needed for index i
/// divides i, so the requirement is upto <= K (InsufficientMomentsError
/// otherwise). Moments used must be real within tol (NonRealMomentError).
/// The result's c_inf is left unset: finite data says nothing about the tail.
RealCycleDensities invert_moments(const MomentSequence& m, std::int64_t upto, double tol);

/// Exact-rational twin; moments are real by construction.
CycleDensities invert_moments_exact(const ExactMomentSequence& m, std::int64_t upto);

enum class ConjugacyStatus {
  ConjugateToPermutation,
  NotConjugate,
  InconclusiveTruncated,
};

enum class CertificateKind {
  NegativeDensity,       // some c_i < -tol
  NonRealMoment,         // Im(m_k) past tol
  PartialSumExceedsOne,  // sum of c_1..c_i past 1 + tol
};

/// Refutation evidence. Re-deriving `value` from the same moments must
/// reproduce it; verify() does exactly that.
struct Certificate {
  CertificateKind kind;
  std::int64_t index;  // offending i (or k for a non-real moment)
  double value;        // the negative c_i, Im(m_k), or the excessive sum

  bool verify(const MomentSequence& m, double tol) const;
};

const char* to_string(ConjugacyStatus s);
const char* to_string(CertificateKind k);

struct DecideOptions {
  double tol = 1e-9;
  /// Caller's promise that the true cycle densities are supported in
  /// {1..declared_support}. Only with this promise can finite data conclude
  /// membership; without it, non-refuted data stays inconclusive.
  std::optional<std::int64_t> declared_support;
};

struct ConjugacyVerdict {
  ConjugacyStatus status;
  std::optional<Certificate> certificate;       // set for NotConjugate
  std::optional<RealCycleDensities> densities;  // set when inversion ran
  std::int64_t checked_up_to = 0;
  std::string reason;  // set for InconclusiveTruncated
};

/// The conjugate-to-permutation decision from trace moments: invert to
/// densities, refute on a negative c_i, a non-real moment, or a partial sum
/// past 1; otherwise inconclusive unless the caller declared full support
/// within reach of the data.
ConjugacyVerdict decide_permutation_conjugacy(const MomentSequence& m,
                                              const DecideOptions& options = {});

struct PPnVerdict {
  bool member = false;
  std::optional<CycleType> cycle_type;  // set when member
  /// Max over k <= n of |m_k - reconstructed m_k| after integer rounding.
  double residual = 0.0;
  std::string reason;  // why membership failed
};

/// Is u unitarily conjugate to a permutation matrix? Sound and complete at
/// tolerance: the first n power traces determine the characteristic
/// polynomial, so a cycle type reconstructing all of them within tol pins the
/// spectrum. Works entirely through moments, no eigensolver.
PPnVerdict decide_ppn_membership(const cmatrix::ComplexMatrix& u, double tol);

/// Same decision from precomputed moments of an n x n unitary (at least the
/// first n of them); callers that already hold the sequence skip the matrix
/// powers.
PPnVerdict decide_ppn_membership(const MomentSequence& m, std::int64_t n, double tol);

/// Max deviation between two same-length moment sequences.
double moment_distance(const MomentSequence& a, const MomentSequence& b);

/// Equal-moments conjugacy oracle: true iff max_k |a_k - b_k| <= tol. For
/// finite matrices this certifies conjugacy only asymptotically (equality of
/// all moments of the limiting objects), not in M_n itself.
bool conjugacy_equal_moments(const MomentSequence& a, const MomentSequence& b, double tol);

/// max_{i <= upto} |a.c_i - b.c_i|, missing entries read as 0.
double densities_distance(const RealCycleDensities& a, const RealCycleDensities& b,
                          std::int64_t upto);
Rational densities_distance(const CycleDensities& a, const CycleDensities& b,
                            std::int64_t upto);

/// Sampled stand-in for a limit along an ultrafilter: exact cyc_i at each
/// sampled dimension for i = 1..track_upto, successive differences, and the
/// value at the largest dimension as the point estimate. This is an estimate
/// with an explicit truncation report, nothing more.
struct LimitEstimate {
  std::vector<std::int64_t> dims;
  /// samples[i][s] = cyc_i of the permutation at dims[s].
  std::map<std::int64_t, std::vector<Rational>> samples;
  CycleDensities estimate;  // values at the largest dim; c_inf = 1 - sum
  std::map<std::int64_t, std::vector<Rational>> successive_differences;
};

LimitEstimate estimate_limit_densities(
    const std::function<Permutation(std::int64_t)>& generator,
    const std::vector<std::int64_t>& sample_dims, std::int64_t track_upto);

}  // namespace permspec::invariants
