#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dmsem {

/// Dense square real matrix, row-major. Plain value type; carries no
/// symmetry or positivity guarantees (see Dmat for that).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}
  Matrix(std::size_t dim, std::vector<double> row_major);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::initializer_list<double> values);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  /// v v^T
  static Matrix outer(std::span<const double> v);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return dim_ == 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }
  const double* data() const noexcept { return data_.data(); }
  double* data() noexcept { return data_.data(); }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double factor);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(double factor, Matrix m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Entrywise product.
Matrix hadamard(const Matrix& a, const Matrix& b);
/// Off-diagonal entries zeroed.
Matrix diagonal_part(const Matrix& m);
/// (m + m^T) / 2
Matrix symmetrized(const Matrix& m);
/// Q M Q^T
Matrix conjugate(const Matrix& q, const Matrix& m);

double trace(const Matrix& m);
/// trace(A B) for symmetric A, B, i.e. the Frobenius inner product.
double frobenius_inner(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_asymmetry(const Matrix& m);

void require_same_dim(const Matrix& a, const Matrix& b);

}  // namespace dmsem
