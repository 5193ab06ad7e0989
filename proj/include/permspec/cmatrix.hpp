#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "permspec/moments.hpp"
#include "permspec/permutation.hpp"

namespace permspec::cmatrix {

using Complex = std::complex<double>;

inline constexpr double kDefaultUnitaryTol = 1e-8;

/// Dense square complex matrix, row-major. Dimensions here are desk-scale
/// (a few hundred); multiplication is the plain cubic loop and all spectral
/// information flows through trace power sums, never an eigensolver.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::int64_t n);
  static ComplexMatrix identity(std::int64_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);

  std::int64_t dim() const { return n_; }

  Complex& at(std::int64_t i, std::int64_t j) {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }
  const Complex& at(std::int64_t i, std::int64_t j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }

  ComplexMatrix multiply(const ComplexMatrix& other) const;
  ComplexMatrix adjoint() const;
  ComplexMatrix subtract(const ComplexMatrix& other) const;
  ComplexMatrix scale(Complex factor) const;

  /// True when every entry is finite.
  bool is_finite() const;

 private:
  std::int64_t n_;
  std::vector<Complex> entries_;
};

/// Normalized trace: sum of the diagonal divided by n, so trace(Id) = 1.
Complex trace(const ComplexMatrix& a);

/// sqrt((1/n) * sum |a_ij|^2); equals sqrt(trace(a* a)) and is 1 on Id for
/// every dimension.
double trace_norm(const ComplexMatrix& a);

/// Trace-norm distance of u*u from the identity.
double unitarity_defect(const ComplexMatrix& u);

struct UnitarityReport {
  double defect;
  bool is_unitary;
  double tol;
};

UnitarityReport check_unitary(const ComplexMatrix& u, double tol = kDefaultUnitaryTol);

/// m_k = trace(u^k) for k = 1..max_k, by iterated multiplication. Throws
/// NotUnitaryError (carrying the defect) when u fails the tolerance check.
MomentSequence moment_sequence(const ComplexMatrix& u, std::int64_t max_k,
                               double tol = kDefaultUnitaryTol);

/// Monic characteristic polynomial det(X*Id - a), ascending coefficients
/// (size n+1, last entry exactly 1), computed from the unnormalized power
/// sums p_k = n*trace(a^k) via the Newton recurrence.
std::vector<Complex> char_poly(const ComplexMatrix& a);

/// Matrix of p: entry (p(j), j) = 1. Unitary with defect 0.
ComplexMatrix permutation_matrix(const permutations::Permutation& p);

/// Haar-ish random unitary: seeded complex Gaussian, orthonormalized by
/// modified Gram-Schmidt with one re-orthogonalization pass.
ComplexMatrix random_unitary(std::int64_t n, Rng& rng);

/// v a v* for a seeded random unitary v. Trace moments are preserved up to
/// float accumulation.
ComplexMatrix conjugate_by_random_unitary(const ComplexMatrix& a, std::uint64_t seed);

}  // namespace permspec::cmatrix
