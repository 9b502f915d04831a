#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "alphaspec/alpha.hpp"
#include "alphaspec/digraph.hpp"
#include "alphaspec/kernels.hpp"

namespace alphaspec {

/// Square row-major real matrix.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t order() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// alpha * diag(out-degrees) + (1 - alpha) * adjacency.
DenseMatrix build_alpha_matrix(const Digraph& d, const AlphaParam& alpha);

/// M * M^T.
DenseMatrix gram(const DenseMatrix& m, const simd::KernelTable& k = simd::active_kernels());

/// Singular values sorted nonincreasing, with the derived norms.
class SingularSpectrum {
 public:
  SingularSpectrum() = default;
  explicit SingularSpectrum(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  double trace_norm() const noexcept;
  double spectral_norm() const noexcept { return values_.empty() ? 0.0 : values_.front(); }
  double abs_det() const noexcept;
  double sum_of_squares() const noexcept;

  /// (value, multiplicity) runs: consecutive values within
  /// rel_tol * max(1, spectral_norm) of the run's first value are merged.
  std::vector<std::pair<double, std::size_t>> grouped(double rel_tol = 1e-8) const;

 private:
  std::vector<double> values_;
};

/// Singular values of a square matrix.
///
/// Computed as square roots of the eigenvalues of M M^T, but the Gram matrix
/// is never formed: one-sided Jacobi rotations orthogonalize the rows of M
/// directly (which is a two-sided Jacobi eigensolve of M M^T carried out on
/// its factor), so zero singular values come out at roundoff level eps * |M|
/// rather than sqrt(eps) * |M|. Throws NumericalError on non-convergence.
SingularSpectrum singular_values(const DenseMatrix& m, const simd::KernelTable& k = simd::active_kernels());

/// Eigenvalues of a symmetric matrix by cyclic Jacobi, sorted nonincreasing.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& s,
                                          const simd::KernelTable& k = simd::active_kernels());

/// |det M| by Gaussian elimination with partial pivoting.
double abs_determinant(const DenseMatrix& m, const simd::KernelTable& k = simd::active_kernels());

enum class RankMode { numeric, exact_rational };

/// Rank of the alpha matrix. Numeric mode counts sigma_i > n * eps * sigma_1 + 1e-12.
/// Exact mode needs alpha as p/q with q <= 64 and eliminates over the integers.
std::size_t numerical_rank(const Digraph& d, const AlphaParam& alpha, RankMode mode);

/// Exact rank of the integer matrix q * A_alpha for alpha = p/q (fraction-free
/// elimination, widening to arbitrary precision on overflow).
std::size_t exact_rank(const Digraph& d, const Rational& alpha);

/// Rank of an integer matrix (row-major, n x n) by fraction-free elimination.
std::size_t integer_rank(std::size_t n, std::vector<long long> entries);

}  // namespace alphaspec
