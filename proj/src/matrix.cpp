#include "dmsem/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dmsem/error.hpp"
#include "dmsem/kernels.hpp"

namespace dmsem {

Matrix::Matrix(std::size_t dim, std::vector<double> row_major) : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) {
    throw Error(Errc::DimensionMismatch,
                "expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(data_.size()));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(Errc::DimensionMismatch, "matrix rows must be square");
    std::copy(r.begin(), r.end(), m.row(i).begin());
    ++i;
  }
  return m;
}

Matrix Matrix::outer(std::span<const double> v) {
  Matrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other);
  kernels::active().axpy(1.0, other.data(), data(), size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other);
  kernels::active().axpy(-1.0, other.data(), data(), size());
  return *this;
}

Matrix& Matrix::operator*=(double factor) {
  kernels::active().scale(factor, data(), size());
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(double factor, Matrix m) { return m *= factor; }

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix c(a.dim());
  kernels::active().gemm(a.data(), b.data(), c.data(), a.dim());
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix c(a.dim());
  kernels::active().hadamard(a.data(), b.data(), c.data(), a.size());
  return c;
}

Matrix diagonal_part(const Matrix& m) {
  Matrix d(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) d(i, i) = m(i, i);
  return d;
}

Matrix symmetrized(const Matrix& m) {
  Matrix s(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
  }
  return s;
}

Matrix conjugate(const Matrix& q, const Matrix& m) {
  return symmetrized(matmul(matmul(q, m), transpose(q)));
}

double trace(const Matrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  return kernels::active().dot(a.data(), b.data(), a.size());
}

double frobenius_norm(const Matrix& m) {
  return std::sqrt(kernels::active().dot(m.data(), m.data(), m.size()));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  return worst;
}

double max_asymmetry(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i + 1; j < m.dim(); ++j) worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  }
  return worst;
}

}  // namespace dmsem
