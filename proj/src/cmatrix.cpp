#include "permspec/cmatrix.hpp"

#include <cmath>

#include "permspec/errors.hpp"

namespace permspec::cmatrix {

ComplexMatrix::ComplexMatrix(std::int64_t n)
    : n_(n), entries_(static_cast<std::size_t>(n * n), Complex{0.0, 0.0}) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::int64_t n) {
  ComplexMatrix m(n);
  for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  ComplexMatrix m(static_cast<std::int64_t>(entries.size()));
  for (std::int64_t i = 0; i < m.dim(); ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& other) const {
  if (n_ != other.n_) throw DimensionMismatchError("multiplying matrices of different sizes");
  ComplexMatrix out(n_);
  // i-k-j order: the inner loop walks both operands row-major.
  for (std::int64_t i = 0; i < n_; ++i) {
    const Complex* arow = &entries_[static_cast<std::size_t>(i * n_)];
    Complex* orow = &out.entries_[static_cast<std::size_t>(i * n_)];
    for (std::int64_t k = 0; k < n_; ++k) {
      Complex aik = arow[k];
      if (aik == Complex{0.0, 0.0}) continue;
      const Complex* brow = &other.entries_[static_cast<std::size_t>(k * n_)];
      for (std::int64_t j = 0; j < n_; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (std::int64_t i = 0; i < n_; ++i)
    for (std::int64_t j = 0; j < n_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::subtract(const ComplexMatrix& other) const {
  if (n_ != other.n_) throw DimensionMismatchError("subtracting matrices of different sizes");
  ComplexMatrix out(n_);
  for (std::size_t idx = 0; idx < entries_.size(); ++idx)
    out.entries_[idx] = entries_[idx] - other.entries_[idx];
  return out;
}

ComplexMatrix ComplexMatrix::scale(Complex factor) const {
  ComplexMatrix out(n_);
  for (std::size_t idx = 0; idx < entries_.size(); ++idx)
    out.entries_[idx] = entries_[idx] * factor;
  return out;
}

bool ComplexMatrix::is_finite() const {
  for (const auto& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

Complex trace(const ComplexMatrix& a) {
  Complex sum{0.0, 0.0};
  for (std::int64_t i = 0; i < a.dim(); ++i) sum += a.at(i, i);
  return sum / static_cast<double>(a.dim());
}

double trace_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::int64_t i = 0; i < a.dim(); ++i)
    for (std::int64_t j = 0; j < a.dim(); ++j) sum += std::norm(a.at(i, j));
  return std::sqrt(sum / static_cast<double>(a.dim()));
}

double unitarity_defect(const ComplexMatrix& u) {
  return trace_norm(u.adjoint().multiply(u).subtract(ComplexMatrix::identity(u.dim())));
}

UnitarityReport check_unitary(const ComplexMatrix& u, double tol) {
  double defect = unitarity_defect(u);
  return {defect, defect <= tol, tol};
}

MomentSequence moment_sequence(const ComplexMatrix& u, std::int64_t max_k, double tol) {
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");
  auto report = check_unitary(u, tol);
  if (!report.is_unitary) throw NotUnitaryError(report.defect, tol);
  MomentSequence m;
  m.values.reserve(static_cast<std::size_t>(max_k));
  ComplexMatrix power = u;
  m.values.push_back(trace(power));
  for (std::int64_t k = 2; k <= max_k; ++k) {
    power = power.multiply(u);
    m.values.push_back(trace(power));
  }
  return m;
}

std::vector<Complex> char_poly(const ComplexMatrix& a) {
  std::int64_t n = a.dim();
  std::vector<Complex> power_sums;  // p_1..p_n, unnormalized
  power_sums.reserve(static_cast<std::size_t>(n));
  ComplexMatrix power = a;
  power_sums.push_back(trace(power) * static_cast<double>(n));
  for (std::int64_t k = 2; k <= n; ++k) {
    power = power.multiply(a);
    power_sums.push_back(trace(power) * static_cast<double>(n));
  }

  // Newton: k*e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j
  std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    double sign = 1.0;
    for (std::int64_t j = 1; j <= k; ++j) {
      acc += sign * e[static_cast<std::size_t>(k - j)] * power_sums[static_cast<std::size_t>(j - 1)];
      sign = -sign;
    }
    e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
  }

  // det(X*Id - a) = sum_k (-1)^k e_k X^{n-k}, ascending coefficient order.
  std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    Complex c = e[static_cast<std::size_t>(k)];
    coeffs[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? c : -c;
  }
  coeffs[static_cast<std::size_t>(n)] = 1.0;
  return coeffs;
}

ComplexMatrix permutation_matrix(const permutations::Permutation& p) {
  ComplexMatrix m(p.size());
  for (std::int64_t j = 0; j < p.size(); ++j) m.at(p(j), j) = 1.0;
  return m;
}

ComplexMatrix random_unitary(std::int64_t n, Rng& rng) {
  ComplexMatrix m(n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) m.at(i, j) = Complex{rng.gaussian(), rng.gaussian()};

  // Modified Gram-Schmidt on columns, two passes.
  for (std::int64_t col = 0; col < n; ++col) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::int64_t prev = 0; prev < col; ++prev) {
        Complex proj{0.0, 0.0};
        for (std::int64_t i = 0; i < n; ++i) proj += std::conj(m.at(i, prev)) * m.at(i, col);
        for (std::int64_t i = 0; i < n; ++i) m.at(i, col) -= proj * m.at(i, prev);
      }
    }
    double norm = 0.0;
    for (std::int64_t i = 0; i < n; ++i) norm += std::norm(m.at(i, col));
    norm = std::sqrt(norm);
    for (std::int64_t i = 0; i < n; ++i) m.at(i, col) /= norm;
  }
  return m;
}

ComplexMatrix conjugate_by_random_unitary(const ComplexMatrix& a, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix v = random_unitary(a.dim(), rng);
  return v.multiply(a).multiply(v.adjoint());
}

}  // namespace permspec::cmatrix
