#include "permspec/measures.hpp"

#include <cmath>

#include "permspec/invariants.hpp"

namespace permspec::measures {

void validate(const CircleMeasure& mu, double tol) {
  double sum = mu.lebesgue_weight;
  if (mu.lebesgue_weight < -tol) throw InvalidDensitiesError("negative Lebesgue weight");
  for (const auto& [i, c] : mu.coefficients) {
    if (i < 1) throw InvalidDensitiesError("atom index must be positive");
    if (c < -tol) throw InvalidDensitiesError("negative weight at i=" + std::to_string(i));
    sum += c;
  }
  if (std::abs(sum - 1.0) > tol)
    throw InvalidDensitiesError("weights sum to " + std::to_string(sum) + ", expected 1");
}

void validate(const ExactCircleMeasure& mu) {
  Rational sum = mu.lebesgue_weight;
  if (mu.lebesgue_weight < Rational(0)) throw InvalidDensitiesError("negative Lebesgue weight");
  for (const auto& [i, c] : mu.coefficients) {
    if (i < 1) throw InvalidDensitiesError("atom index must be positive");
    if (c < Rational(0)) throw InvalidDensitiesError("negative weight at i=" + std::to_string(i));
    sum += c;
  }
  if (sum != Rational(1)) throw InvalidDensitiesError("weights sum to " + sum.str() + ", expected 1");
}

int atom_moment(std::optional<std::int64_t> i, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("moment index must be >= 1");
  if (!i) return 0;  // Lebesgue kills every positive moment
  if (*i < 1) throw std::invalid_argument("atom index must be positive");
  return k % *i == 0 ? 1 : 0;
}

ExactMomentSequence mixture_moments(const ExactCircleMeasure& mu, std::int64_t max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");
  ExactMomentSequence m;
  m.values.reserve(static_cast<std::size_t>(max_k));
  for (std::int64_t k = 1; k <= max_k; ++k) {
    Rational sum(0);
    for (const auto& [i, c] : mu.coefficients)
      if (k % i == 0) sum += c;
    m.values.push_back(sum);
  }
  return m;
}

MomentSequence mixture_moments(const CircleMeasure& mu, std::int64_t max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");
  MomentSequence m;
  m.values.reserve(static_cast<std::size_t>(max_k));
  for (std::int64_t k = 1; k <= max_k; ++k) {
    double sum = 0.0;
    for (const auto& [i, c] : mu.coefficients)
      if (k % i == 0) sum += c;
    m.values.emplace_back(sum, 0.0);
  }
  return m;
}

HullVerdict recover_mixture(const MomentSequence& m, std::int64_t upto, double tol) {
  HullVerdict verdict;
  for (std::int64_t k = 1; k <= m.max_k(); ++k) {
    if (std::abs(m.at(k).imag()) > tol) {
      verdict.failing_index = k;
      verdict.failure_reason = "non-real moment at k=" + std::to_string(k);
      return verdict;
    }
  }

  auto densities = invariants::invert_moments(m, upto, tol);

  CircleMeasure mu;
  double sum = 0.0;
  for (const auto& [i, c] : densities.values) {
    if (c < -tol) {
      verdict.failing_index = i;
      verdict.failure_reason = "negative weight " + std::to_string(c) + " at i=" + std::to_string(i);
      return verdict;
    }
    double w = c;
    if (w < 0.0) {
      verdict.clamped.emplace_back(i, c);
      w = 0.0;
    }
    if (w > 0.0) mu.coefficients[i] = w;
    sum += w;
  }
  if (sum > 1.0 + tol) {
    verdict.failing_index = upto;
    verdict.failure_reason = "weights sum to " + std::to_string(sum) + " past 1";
    return verdict;
  }
  mu.lebesgue_weight = std::max(0.0, 1.0 - sum);

  // The mixture must explain every moment we were given, not just the ones
  // used by the inversion.
  MomentSequence reproduced = mixture_moments(mu, m.max_k());
  for (std::int64_t k = 1; k <= m.max_k(); ++k) {
    if (std::abs(reproduced.at(k) - m.at(k)) > tol) {
      verdict.failing_index = k;
      verdict.failure_reason = "moment at k=" + std::to_string(k) +
                               " not reproduced by any mixture supported in 1.." +
                               std::to_string(upto);
      return verdict;
    }
  }

  verdict.member = true;
  verdict.recovered = std::move(mu);
  return verdict;
}

ExactHullVerdict recover_mixture_exact(const ExactMomentSequence& m, std::int64_t upto) {
  ExactHullVerdict verdict;
  auto densities = invariants::invert_moments_exact(m, upto);

  ExactCircleMeasure mu;
  Rational sum(0);
  for (const auto& [i, c] : densities.values) {
    if (c < Rational(0)) {
      verdict.failing_index = i;
      verdict.failure_reason = "negative weight " + c.str() + " at i=" + std::to_string(i);
      return verdict;
    }
    if (!c.is_zero()) mu.coefficients[i] = c;
    sum += c;
  }
  if (sum > Rational(1)) {
    verdict.failing_index = upto;
    verdict.failure_reason = "weights sum to " + sum.str() + " past 1";
    return verdict;
  }
  mu.lebesgue_weight = Rational(1) - sum;

  ExactMomentSequence reproduced = mixture_moments(mu, m.max_k());
  for (std::int64_t k = 1; k <= m.max_k(); ++k) {
    if (!(reproduced.at(k) == m.at(k))) {
      verdict.failing_index = k;
      verdict.failure_reason = "moment at k=" + std::to_string(k) + " not reproduced";
      return verdict;
    }
  }

  verdict.member = true;
  verdict.recovered = std::move(mu);
  return verdict;
}

std::vector<HistogramBin> histogram(const CircleMeasure& mu, std::int64_t bins,
                                    std::int64_t atom_cutoff) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  if (atom_cutoff < 1) throw std::invalid_argument("atom cutoff must be >= 1");
  const double two_pi = 2.0 * M_PI;
  const double width = two_pi / static_cast<double>(bins);

  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (std::int64_t b = 0; b < bins; ++b) {
    out[static_cast<std::size_t>(b)].start = width * static_cast<double>(b);
    out[static_cast<std::size_t>(b)].end = width * static_cast<double>(b + 1);
    out[static_cast<std::size_t>(b)].mass = 0.0;
  }

  double diffuse = mu.lebesgue_weight;
  for (const auto& [i, c] : mu.coefficients) {
    if (i > atom_cutoff) {
      diffuse += c;  // unresolved fine atoms are as good as uniform here
      continue;
    }
    double per_atom = c / static_cast<double>(i);
    for (std::int64_t j = 0; j < i; ++j) {
      double angle = two_pi * static_cast<double>(j) / static_cast<double>(i);
      auto b = static_cast<std::int64_t>(angle / width);
      if (b >= bins) b = bins - 1;  // guard the angle == 2pi rounding edge
      out[static_cast<std::size_t>(b)].mass += per_atom;
    }
  }

  double per_bin = diffuse / static_cast<double>(bins);
  for (auto& bin : out) bin.mass += per_bin;
  return out;
}

}  // namespace permspec::measures
