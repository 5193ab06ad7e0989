#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permspec/moments.hpp"
#include "permspec/rational.hpp"

namespace permspec::measures {

inline constexpr std::optional<std::int64_t> kLebesgue = std::nullopt;

/// Probability measure on the unit circle of the form
///   sum_i c_i * (uniform atoms on the i-th roots of unity) + c_inf * Lebesgue.
/// This mixture class is exactly what the moment calculus characterizes;
/// arbitrary Borel measures are out of scope.
template <class Scalar>
struct BasicCircleMeasure {
  std::map<std::int64_t, Scalar> coefficients;
  Scalar lebesgue_weight{};

  Scalar coefficient_sum() const {
    Scalar s{};
    for (const auto& [i, c] : coefficients) s += c;
    return s;
  }
};

using CircleMeasure = BasicCircleMeasure<double>;
using ExactCircleMeasure = BasicCircleMeasure<Rational>;

/// Validates nonnegative weights summing to 1 (exactly for rationals, within
/// tol for doubles). Throws InvalidDensitiesError.
void validate(const CircleMeasure& mu, double tol = 1e-9);
void validate(const ExactCircleMeasure& mu);

/// k-th moment of a single mixture component: 1 when the atom index divides
/// k, 0 otherwise; the Lebesgue part (index nullopt) integrates every z^k,
/// k >= 1, to 0.
int atom_moment(std::optional<std::int64_t> i, std::int64_t k);

/// m_k = sum of c_i over i | k, for k = 1..max_k. Real values in [0,1],
/// nondecreasing along divisibility.
ExactMomentSequence mixture_moments(const ExactCircleMeasure& mu, std::int64_t max_k);
MomentSequence mixture_moments(const CircleMeasure& mu, std::int64_t max_k);

struct HullVerdict {
  bool member = false;
  std::optional<CircleMeasure> recovered;  // set when member
  std::optional<std::int64_t> failing_index;
  std::string failure_reason;
  /// Recovered weights in [-tol, 0) that were clamped to 0; raw values kept.
  std::vector<std::pair<std::int64_t, double>> clamped;
};

/// Does the moment sequence come from a mixture with atom support in
/// {1..upto} (plus Lebesgue mass)? Inverts to candidate weights, clamps float
/// noise in [-tol, 0), assigns the slack to the Lebesgue part, and demands
/// the mixture reproduce every given moment within tol.
HullVerdict recover_mixture(const MomentSequence& m, std::int64_t upto, double tol);

struct ExactHullVerdict {
  bool member = false;
  std::optional<ExactCircleMeasure> recovered;
  std::optional<std::int64_t> failing_index;
  std::string failure_reason;
};

/// Exact twin: strict nonnegativity, exact reproduction, no clamping.
ExactHullVerdict recover_mixture_exact(const ExactMomentSequence& m, std::int64_t upto);

struct HistogramBin {
  double start;  // radians
  double end;
  double mass;
};

/// Binned view of the measure over [0, 2pi): atoms of components with
/// i <= atom_cutoff land in their bins, everything else (higher atoms and the
/// Lebesgue part) is spread uniformly. Total mass 1.
std::vector<HistogramBin> histogram(const CircleMeasure& mu, std::int64_t bins,
                                    std::int64_t atom_cutoff);

}  // namespace permspec::measures
