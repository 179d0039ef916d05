#pragma once

// Symmetric eigendecomposition, validated density matrices, and the
// Löwner-order / support / normalization primitives built on them.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dmsem/matrix.hpp"

namespace dmsem {

/// Eigenvalues in (-kPsdTol, 0) are clamped to zero; anything lower is NotPSD.
inline constexpr double kPsdTol = 1e-9;
/// Eigenvalues at or below kRankTol * lambda_max count as kernel.
inline constexpr double kRankTol = 1e-8;
inline constexpr double kSymmetryTol = 1e-10;
/// Relative tolerance for treating two eigenvalues as one eigenspace.
inline constexpr double kEigenspaceTol = 1e-8;

struct Eigensystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // row i is the unit eigenvector of values[i]
};

/// Cyclic Jacobi eigensolver for a symmetric matrix (no positivity check).
/// Output order is deterministic: descending eigenvalue, exact ties broken
/// by descending lexicographic eigenvector, each eigenvector's first
/// non-negligible component made positive.
Eigensystem eigh(const Matrix& symmetric);

double min_eigenvalue(const Matrix& symmetric);
double max_eigenvalue(const Matrix& symmetric);

struct Eigenspace {
  double value;
  std::size_t multiplicity;
  Matrix projector;
};

class SpectralDecomposition {
 public:
  SpectralDecomposition() = default;
  /// Takes any orthonormal eigensystem and puts it in canonical order.
  explicit SpectralDecomposition(Eigensystem system);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> eigenvalues() const noexcept { return values_; }
  double eigenvalue(std::size_t i) const { return values_[i]; }
  std::span<const double> eigenvector(std::size_t i) const { return vectors_.row(i); }
  /// Rows are eigenvectors.
  const Matrix& eigenvectors() const noexcept { return vectors_; }

  double max_eigenvalue() const { return values_.empty() ? 0.0 : values_.front(); }
  double min_eigenvalue() const { return values_.empty() ? 0.0 : values_.back(); }

  /// |i><i|
  Matrix projector(std::size_t i) const;
  /// Projectors summed over eigenvalues equal within `rel_tol` (relative to
  /// max(1, |lambda_max|)), in descending eigenvalue order.
  std::vector<Eigenspace> eigenspaces(double rel_tol = kEigenspaceTol) const;

  /// sum_i new_values[i] |i><i|
  Matrix with_eigenvalues(std::span<const double> new_values) const;
  Matrix reconstruct() const { return with_eigenvalues(values_); }

  /// Entries <i|m|j> of `m` expressed in this eigenbasis.
  Matrix to_basis(const Matrix& m) const;
  /// Inverse of to_basis.
  Matrix from_basis(const Matrix& coords) const;

  /// Number of eigenvalues above rank_tol * max(lambda_max, 0).
  std::size_t rank(double rank_tol = kRankTol) const;
  bool is_support(std::size_t i, double rank_tol = kRankTol) const;

 private:
  std::vector<double> values_;
  Matrix vectors_;
};

/// Real symmetric positive-semidefinite matrix with its spectral
/// decomposition attached. Immutable; copies share state.
class Dmat {
 public:
  /// Validates symmetry and positivity. Throws NonSymmetric / NotPSD.
  static Dmat make(const Matrix& m, double psd_tol = kPsdTol);
  /// Builds V diag(values) V^T from an existing eigensystem. Eigenvalues
  /// must be >= -psd_tol.
  static Dmat from_spectrum(const SpectralDecomposition& basis, std::span<const double> values);
  static Dmat identity(std::size_t dim);
  static Dmat zero(std::size_t dim);
  static Dmat diagonal(std::initializer_list<double> values);
  static Dmat pure(std::span<const double> vector);

  std::size_t dim() const noexcept;
  const Matrix& matrix() const noexcept;
  const SpectralDecomposition& spectrum() const noexcept;
  double max_eigenvalue() const noexcept { return spectrum().max_eigenvalue(); }
  double operator()(std::size_t i, std::size_t j) const { return matrix()(i, j); }
  /// Set only by the normalization routines and validated loaders;
  /// guarantees lambda_max <= 1 + 1e-9.
  bool normalized() const noexcept;

  /// factor * this, factor > 0. Reuses the eigenbasis.
  Dmat scaled(double factor) const;
  Dmat as_normalized() const;

 private:
  struct State;
  explicit Dmat(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

/// Validates and decomposes. Throws NonSymmetric / NotPSD.
SpectralDecomposition spectral_decompose(const Matrix& m, double psd_tol = kPsdTol);
inline const SpectralDecomposition& spectral_decompose(const Dmat& m) { return m.spectrum(); }

/// M / max(1, lambda_max). Only ever scales down. Throws ZeroMatrix.
Dmat normalize_max_eig(const Dmat& m);
/// M / lambda_max, so the result has lambda_max exactly 1. Throws ZeroMatrix.
Dmat scale_to_unit_max_eig(const Dmat& m);

/// A ⊑ B: min eigenvalue of (B - A) >= -tol.
bool loewner_leq(const Dmat& a, const Dmat& b, double tol = kPsdTol);
bool loewner_leq(const Matrix& a, const Matrix& b, double tol = kPsdTol);

/// Sum of eigenprojectors with eigenvalue above rank_tol * lambda_max.
Dmat support_projector(const Dmat& m, double rank_tol = kRankTol);
/// Complement of support_projector.
Dmat kernel_projector(const Dmat& m, double rank_tol = kRankTol);

/// Spectral square root of a PSD matrix.
Dmat sqrt_psd(const Dmat& m);

}  // namespace dmsem
