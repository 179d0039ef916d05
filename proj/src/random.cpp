#include "dmsem/random.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace dmsem {

double RandomDmats::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

std::size_t RandomDmats::uniform_int(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Matrix RandomDmats::orthogonal(std::size_t dim) {
  std::normal_distribution<double> gauss;
  // modified Gram-Schmidt on Gaussian rows, re-orthogonalized once
  std::vector<std::vector<double>> rows(dim, std::vector<double>(dim));
  for (auto& r : rows) {
    for (double& v : r) v = gauss(rng_);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        double d = 0.0;
        for (std::size_t k = 0; k < dim; ++k) d += rows[i][k] * rows[j][k];
        for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= d * rows[j][k];
      }
    }
    double norm = 0.0;
    for (double v : rows[i]) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : rows[i]) v /= norm;
  }
  std::vector<double> flat;
  flat.reserve(dim * dim);
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return Matrix(dim, std::move(flat));
}

Dmat RandomDmats::psd(std::size_t dim, std::size_t rank, double lo, double hi) {
  std::vector<double> values(dim, 0.0);
  for (std::size_t i = 0; i < rank && i < dim; ++i) values[i] = uniform(lo, hi);
  const Matrix q = orthogonal(dim);
  // rows of q are eigenvectors: sum_i v_i q_i q_i^T = Q^T diag(v) Q
  return Dmat::make(conjugate(transpose(q), Matrix::diagonal(values)));
}

Dmat RandomDmats::any_rank(std::size_t dim, double lo, double hi) { return psd(dim, uniform_int(1, dim), lo, hi); }

std::pair<Dmat, Dmat> RandomDmats::ordered_pair(std::size_t dim) {
  const Dmat b = any_rank(dim, 0.2, 1.0);
  // A = B^{1/2} C B^{1/2} with 0 <= C <= I gives 0 <= A <= B
  const Dmat c = any_rank(dim, 0.0, 1.0);
  const Matrix root = sqrt_psd(b).matrix();
  const Matrix a = symmetrized(matmul(matmul(root, c.matrix()), root));
  return {Dmat::make(a), b};
}

std::pair<Dmat, Dmat> RandomDmats::commuting_pair(std::size_t dim, double lo, double hi) {
  const Matrix q = transpose(orthogonal(dim));
  std::vector<double> va(dim), vb(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    va[i] = uniform(lo, hi);
    vb[i] = uniform(lo, hi);
  }
  return {Dmat::make(conjugate(q, Matrix::diagonal(va))), Dmat::make(conjugate(q, Matrix::diagonal(vb)))};
}

}  // namespace dmsem
