#include "permspec/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace permspec::invariants {

namespace {

// Indices used by the inversion for i <= upto are exactly the divisors of the
// inverted indices; checking realness once per used k keeps error reports
// stable.
void check_real_moments(const MomentSequence& m, std::int64_t upto, double tol) {
  std::vector<bool> used(static_cast<std::size_t>(m.max_k()) + 1, false);
  for (std::int64_t i = 1; i <= upto; ++i)
    for (const auto& se : numtheory::epsilon_exponents(i))
      used[static_cast<std::size_t>(se.exponent)] = true;
  for (std::int64_t k = 1; k <= m.max_k(); ++k)
    if (used[static_cast<std::size_t>(k)] && std::abs(m.at(k).imag()) > tol)
      throw NonRealMomentError(k, m.at(k).imag());
}

}  // namespace

RealCycleDensities invert_moments(const MomentSequence& m, std::int64_t upto, double tol) {
  if (upto < 1) throw std::invalid_argument("inversion range must be >= 1");
  if (upto > m.max_k())
    throw InsufficientMomentsError(m.max_k() + 1, m.max_k() + 1, m.max_k());
  check_real_moments(m, upto, tol);
  RealCycleDensities d;
  for (std::int64_t i = 1; i <= upto; ++i)
    d.values[i] = invert_single<double>(i, [&](std::int64_t e) { return m.at(e).real(); });
  return d;
}

CycleDensities invert_moments_exact(const ExactMomentSequence& m, std::int64_t upto) {
  if (upto < 1) throw std::invalid_argument("inversion range must be >= 1");
  if (upto > m.max_k())
    throw InsufficientMomentsError(m.max_k() + 1, m.max_k() + 1, m.max_k());
  CycleDensities d;
  for (std::int64_t i = 1; i <= upto; ++i)
    d.values[i] = invert_single<Rational>(i, [&](std::int64_t e) { return m.at(e); });
  return d;
}

bool Certificate::verify(const MomentSequence& m, double tol) const {
  switch (kind) {
    case CertificateKind::NonRealMoment:
      return index >= 1 && index <= m.max_k() &&
             std::abs(m.at(index).imag() - value) <= 1e-15 && std::abs(value) > tol;
    case CertificateKind::NegativeDensity: {
      double c = invert_single<double>(index, [&](std::int64_t e) { return m.at(e).real(); });
      return std::abs(c - value) <= 1e-15 && value < -tol;
    }
    case CertificateKind::PartialSumExceedsOne: {
      double sum = 0.0;
      for (std::int64_t i = 1; i <= index; ++i)
        sum += invert_single<double>(i, [&](std::int64_t e) { return m.at(e).real(); });
      return std::abs(sum - value) <= 1e-12 && value > 1.0 + tol;
    }
  }
  return false;
}

const char* to_string(ConjugacyStatus s) {
  switch (s) {
    case ConjugacyStatus::ConjugateToPermutation: return "ConjugateToPermutation";
    case ConjugacyStatus::NotConjugate: return "NotConjugate";
    case ConjugacyStatus::InconclusiveTruncated: return "InconclusiveTruncated";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::NegativeDensity: return "NegativeDensity";
    case CertificateKind::NonRealMoment: return "NonRealMoment";
    case CertificateKind::PartialSumExceedsOne: return "PartialSumExceedsOne";
  }
  return "?";
}

ConjugacyVerdict decide_permutation_conjugacy(const MomentSequence& m,
                                              const DecideOptions& options) {
  const double tol = options.tol;
  const std::int64_t K = m.max_k();
  ConjugacyVerdict verdict;
  verdict.checked_up_to = K;

  // A permutation spectrum has real nonnegative power traces.
  for (std::int64_t k = 1; k <= K; ++k) {
    double im = m.at(k).imag();
    if (std::abs(im) > tol) {
      verdict.status = ConjugacyStatus::NotConjugate;
      verdict.certificate = Certificate{CertificateKind::NonRealMoment, k, im};
      return verdict;
    }
  }

  RealCycleDensities densities;
  double partial_sum = 0.0;
  for (std::int64_t i = 1; i <= K; ++i) {
    double c = invert_single<double>(i, [&](std::int64_t e) { return m.at(e).real(); });
    densities.values[i] = c;
    if (c < -tol) {
      verdict.status = ConjugacyStatus::NotConjugate;
      verdict.certificate = Certificate{CertificateKind::NegativeDensity, i, c};
      verdict.densities = std::move(densities);
      return verdict;
    }
    partial_sum += c;
    // The witness bound: c_1 + .. + c_i <= Tr(u^{i!}) <= 1 for permutation data.
    if (partial_sum > 1.0 + tol) {
      verdict.status = ConjugacyStatus::NotConjugate;
      verdict.certificate =
          Certificate{CertificateKind::PartialSumExceedsOne, i, partial_sum};
      verdict.densities = std::move(densities);
      return verdict;
    }
  }
  verdict.densities = std::move(densities);

  if (options.declared_support) {
    if (*options.declared_support <= K) {
      verdict.status = ConjugacyStatus::ConjugateToPermutation;
      return verdict;
    }
    verdict.status = ConjugacyStatus::InconclusiveTruncated;
    verdict.reason = "declared support " + std::to_string(*options.declared_support) +
                     " exceeds available moments K=" + std::to_string(K);
    return verdict;
  }

  verdict.status = ConjugacyStatus::InconclusiveTruncated;
  verdict.reason = "all densities up to K=" + std::to_string(K) +
                   " are admissible; the full criterion ranges over every index";
  return verdict;
}

PPnVerdict decide_ppn_membership(const cmatrix::ComplexMatrix& u, double tol) {
  return decide_ppn_membership(cmatrix::moment_sequence(u, u.dim(), tol), u.dim(), tol);
}

PPnVerdict decide_ppn_membership(const MomentSequence& m, std::int64_t n, double tol) {
  if (m.max_k() < n) throw InsufficientMomentsError(n, n, m.max_k());

  PPnVerdict verdict;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::abs(m.at(k).imag()) > tol) {
      verdict.reason = "non-real moment at k=" + std::to_string(k);
      return verdict;
    }
  }

  CycleType type;
  type.n = n;
  std::int64_t covered = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    double c = invert_single<double>(i, [&](std::int64_t e) { return m.at(e).real(); });
    double cycles_real = c * static_cast<double>(n) / static_cast<double>(i);
    double rounded = std::round(cycles_real);
    if (std::abs(cycles_real - rounded) > tol) {
      verdict.reason = "density at i=" + std::to_string(i) +
                       " is not an integer multiple of i/n (cycle count " +
                       std::to_string(cycles_real) + ")";
      return verdict;
    }
    auto count = static_cast<std::int64_t>(rounded);
    if (count < 0) {
      verdict.reason = "negative cycle count at i=" + std::to_string(i);
      return verdict;
    }
    if (count > 0) {
      type.counts[i] = count;
      covered += i * count;
    }
  }
  if (covered != n) {
    verdict.reason = "rounded cycle counts cover " + std::to_string(covered) +
                     " of " + std::to_string(n) + " points";
    return verdict;
  }

  // Soundness: the reconstructed moments must match all n of them, which pins
  // the characteristic polynomial and hence the spectrum with multiplicity.
  double residual = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    double reconstructed = permutations::trace_power(type, k).to_double();
    residual = std::max(residual, std::abs(m.at(k) - std::complex<double>{reconstructed, 0.0}));
  }
  verdict.residual = residual;
  if (residual > tol) {
    verdict.reason = "moment reconstruction residual " + std::to_string(residual) +
                     " exceeds tolerance";
    return verdict;
  }

  verdict.member = true;
  verdict.cycle_type = std::move(type);
  return verdict;
}

double moment_distance(const MomentSequence& a, const MomentSequence& b) {
  if (a.max_k() != b.max_k())
    throw DimensionMismatchError("moment sequences have different lengths");
  double dist = 0.0;
  for (std::int64_t k = 1; k <= a.max_k(); ++k)
    dist = std::max(dist, std::abs(a.at(k) - b.at(k)));
  return dist;
}

bool conjugacy_equal_moments(const MomentSequence& a, const MomentSequence& b, double tol) {
  return moment_distance(a, b) <= tol;
}

double densities_distance(const RealCycleDensities& a, const RealCycleDensities& b,
                          std::int64_t upto) {
  double dist = 0.0;
  for (std::int64_t i = 1; i <= upto; ++i) {
    auto ai = a.values.count(i) ? a.values.at(i) : 0.0;
    auto bi = b.values.count(i) ? b.values.at(i) : 0.0;
    dist = std::max(dist, std::abs(ai - bi));
  }
  return dist;
}

Rational densities_distance(const CycleDensities& a, const CycleDensities& b,
                            std::int64_t upto) {
  Rational dist(0);
  for (std::int64_t i = 1; i <= upto; ++i) {
    Rational ai = a.values.count(i) ? a.values.at(i) : Rational(0);
    Rational bi = b.values.count(i) ? b.values.at(i) : Rational(0);
    Rational diff = ai < bi ? bi - ai : ai - bi;
    if (dist < diff) dist = diff;
  }
  return dist;
}

LimitEstimate estimate_limit_densities(
    const std::function<Permutation(std::int64_t)>& generator,
    const std::vector<std::int64_t>& sample_dims, std::int64_t track_upto) {
  if (sample_dims.size() < 2)
    throw std::invalid_argument("limit estimation needs at least two sample dimensions");
  if (!std::is_sorted(sample_dims.begin(), sample_dims.end()))
    throw std::invalid_argument("sample dimensions must be increasing");

  LimitEstimate est;
  est.dims = sample_dims;
  for (std::int64_t i = 1; i <= track_upto; ++i) est.samples[i] = {};

  for (std::int64_t dim : sample_dims) {
    Permutation p = generator(dim);
    auto d = permutations::densities_of(permutations::cycle_type(p));
    for (std::int64_t i = 1; i <= track_upto; ++i)
      est.samples[i].push_back(d.values.count(i) ? d.values.at(i) : Rational(0));
  }

  Rational tracked_sum(0);
  for (std::int64_t i = 1; i <= track_upto; ++i) {
    const auto& row = est.samples[i];
    est.estimate.values[i] = row.back();
    tracked_sum += row.back();
    std::vector<Rational> diffs;
    for (std::size_t s = 1; s < row.size(); ++s) diffs.push_back(row[s] - row[s - 1]);
    est.successive_differences[i] = std::move(diffs);
  }
  est.estimate.c_inf = Rational(1) - tracked_sum;
  return est;
}

}  // namespace permspec::invariants
