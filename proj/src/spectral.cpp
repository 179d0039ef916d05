#include "dmsem/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dmsem/error.hpp"
#include "dmsem/kernels.hpp"

namespace dmsem {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSignTol = 1e-12;

void require_finite(const Matrix& m) {
  for (double v : m.values()) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "matrix has a non-finite entry");
  }
}

void require_symmetric(const Matrix& m) {
  if (m.empty()) throw Error(Errc::InvalidArgument, "matrix dimension must be positive");
  require_finite(m);
  const double asym = max_asymmetry(m);
  if (asym > kSymmetryTol) {
    throw Error(Errc::NonSymmetric, "max |m_ij - m_ji| = " + std::to_string(asym));
  }
}

double off_diagonal_sq(const Matrix& a) {
  double off = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) off += a(i, j) * a(i, j);
  }
  return off;
}

// Values below -psd_tol are rejected, the rest of the negatives become 0.
void clamp_negatives(std::vector<double>& values, double psd_tol) {
  for (double& v : values) {
    if (v < -psd_tol) {
      throw Error(Errc::NotPSD, "eigenvalue " + std::to_string(v) + " below -" + std::to_string(psd_tol));
    }
    if (v < 0.0) v = 0.0;
  }
}

}  // namespace

Eigensystem eigh(const Matrix& symmetric) {
  const std::size_t n = symmetric.dim();
  const auto& k = kernels::active();
  Matrix a = symmetrized(symmetric);
  Matrix vt = Matrix::identity(n);

  const double scale = frobenius_norm(a);
  if (scale > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      const double off = off_diagonal_sq(a);
      if (off == 0.0 || std::sqrt(off) <= 1e-16 * scale) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          const double app = a(p, p);
          const double aqq = a(q, q);
          // Drop entries that can no longer move the diagonal.
          const double g = 100.0 * std::abs(apq);
          if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
            a(p, q) = a(q, p) = 0.0;
            continue;
          }
          const double theta = (aqq - app) / (2.0 * apq);
          double t;
          if (std::abs(theta) > 1e150) {
            t = 0.5 / theta;
          } else {
            t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          }
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;

          k.rot(a.row(p).data(), a.row(q).data(), n, c, s);
          for (std::size_t r = 0; r < n; ++r) {
            a(r, p) = a(p, r);
            a(r, q) = a(q, r);
          }
          a(p, p) = app - t * apq;
          a(q, q) = aqq + t * apq;
          a(p, q) = a(q, p) = 0.0;

          k.rot(vt.row(p).data(), vt.row(q).data(), n, c, s);
        }
      }
    }
  }

  Eigensystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(vt);
  SpectralDecomposition canonical(std::move(out));
  return {std::vector<double>(canonical.eigenvalues().begin(), canonical.eigenvalues().end()),
          canonical.eigenvectors()};
}

double min_eigenvalue(const Matrix& symmetric) {
  const auto sys = eigh(symmetric);
  return sys.values.back();
}

double max_eigenvalue(const Matrix& symmetric) {
  const auto sys = eigh(symmetric);
  return sys.values.front();
}

// --- SpectralDecomposition --------------------------------------------------

SpectralDecomposition::SpectralDecomposition(Eigensystem system) {
  const std::size_t n = system.values.size();
  if (system.vectors.dim() != n) throw Error(Errc::DimensionMismatch, "eigensystem shape");

  for (std::size_t i = 0; i < n; ++i) {
    auto v = system.vectors.row(i);
    const auto lead = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > kSignTol; });
    if (lead != v.end() && *lead < 0.0) {
      for (double& x : v) x = -x;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (system.values[i] != system.values[j]) return system.values[i] > system.values[j];
    const auto vi = system.vectors.row(i);
    const auto vj = system.vectors.row(j);
    return std::lexicographical_compare(vj.begin(), vj.end(), vi.begin(), vi.end());
  });

  values_.resize(n);
  vectors_ = Matrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    values_[r] = system.values[order[r]];
    const auto src = system.vectors.row(order[r]);
    std::copy(src.begin(), src.end(), vectors_.row(r).begin());
  }
}

Matrix SpectralDecomposition::projector(std::size_t i) const { return Matrix::outer(eigenvector(i)); }

std::vector<Eigenspace> SpectralDecomposition::eigenspaces(double rel_tol) const {
  std::vector<Eigenspace> spaces;
  const double tol = rel_tol * std::max(1.0, std::abs(max_eigenvalue()));
  const auto& k = kernels::active();
  std::size_t i = 0;
  while (i < dim()) {
    Eigenspace space{values_[i], 0, Matrix(dim())};
    double sum = 0.0;
    std::size_t j = i;
    for (; j < dim() && std::abs(values_[j] - values_[i]) <= tol; ++j) {
      const auto v = eigenvector(j);
      for (std::size_t r = 0; r < dim(); ++r) k.axpy(v[r], v.data(), space.projector.row(r).data(), dim());
      sum += values_[j];
      ++space.multiplicity;
    }
    space.value = sum / static_cast<double>(space.multiplicity);
    spaces.push_back(std::move(space));
    i = j;
  }
  return spaces;
}

Matrix SpectralDecomposition::with_eigenvalues(std::span<const double> new_values) const {
  if (new_values.size() != dim()) throw Error(Errc::DimensionMismatch, "eigenvalue count");
  Matrix scaled_rows = vectors_;
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < dim(); ++i) k.scale(new_values[i], scaled_rows.row(i).data(), dim());
  return symmetrized(matmul(transpose(vectors_), scaled_rows));
}

Matrix SpectralDecomposition::to_basis(const Matrix& m) const {
  return matmul(matmul(vectors_, m), transpose(vectors_));
}

Matrix SpectralDecomposition::from_basis(const Matrix& coords) const {
  return matmul(matmul(transpose(vectors_), coords), vectors_);
}

std::size_t SpectralDecomposition::rank(double rank_tol) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < dim(); ++i) r += is_support(i, rank_tol) ? 1 : 0;
  return r;
}

bool SpectralDecomposition::is_support(std::size_t i, double rank_tol) const {
  const double top = std::max(max_eigenvalue(), 0.0);
  return values_[i] > 0.0 && values_[i] > rank_tol * top;
}

// --- Dmat -------------------------------------------------------------------

struct Dmat::State {
  Matrix matrix;
  SpectralDecomposition spectrum;
  bool normalized = false;
};

SpectralDecomposition spectral_decompose(const Matrix& m, double psd_tol) {
  require_symmetric(m);
  Eigensystem sys = eigh(m);
  clamp_negatives(sys.values, psd_tol);
  return SpectralDecomposition(std::move(sys));
}

Dmat Dmat::make(const Matrix& m, double psd_tol) {
  auto spectrum = spectral_decompose(m, psd_tol);
  return Dmat(std::make_shared<const State>(State{m, std::move(spectrum), false}));
}

Dmat Dmat::from_spectrum(const SpectralDecomposition& basis, std::span<const double> values) {
  if (values.size() != basis.dim()) throw Error(Errc::DimensionMismatch, "eigenvalue count");
  std::vector<double> clamped(values.begin(), values.end());
  for (double v : clamped) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "non-finite eigenvalue");
  }
  clamp_negatives(clamped, kPsdTol);
  Matrix m = basis.with_eigenvalues(clamped);
  SpectralDecomposition spectrum(Eigensystem{std::move(clamped), basis.eigenvectors()});
  return Dmat(std::make_shared<const State>(State{std::move(m), std::move(spectrum), false}));
}

Dmat Dmat::identity(std::size_t dim) { return make(Matrix::identity(dim)); }
Dmat Dmat::zero(std::size_t dim) { return make(Matrix(dim)); }
Dmat Dmat::diagonal(std::initializer_list<double> values) { return make(Matrix::diagonal(values)); }
Dmat Dmat::pure(std::span<const double> vector) { return make(Matrix::outer(vector)); }

std::size_t Dmat::dim() const noexcept { return state_->matrix.dim(); }
const Matrix& Dmat::matrix() const noexcept { return state_->matrix; }
const SpectralDecomposition& Dmat::spectrum() const noexcept { return state_->spectrum; }
bool Dmat::normalized() const noexcept { return state_->normalized; }

Dmat Dmat::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw Error(Errc::InvalidArgument, "scale factor must be positive");
  std::vector<double> values(spectrum().eigenvalues().begin(), spectrum().eigenvalues().end());
  for (double& v : values) v *= factor;
  SpectralDecomposition spectrum_scaled(Eigensystem{std::move(values), spectrum().eigenvectors()});
  return Dmat(std::make_shared<const State>(State{factor * matrix(), std::move(spectrum_scaled), false}));
}

Dmat Dmat::as_normalized() const {
  if (max_eigenvalue() > 1.0 + 1e-9) {
    throw Error(Errc::NotNormalized, "lambda_max = " + std::to_string(max_eigenvalue()));
  }
  return Dmat(std::make_shared<const State>(State{matrix(), spectrum(), true}));
}

// --- normalization, order, support -------------------------------------------

namespace {

void require_nonzero(const Dmat& m) {
  if (frobenius_norm(m.matrix()) < 1e-12) throw Error(Errc::ZeroMatrix, "matrix is zero");
}

}  // namespace

Dmat normalize_max_eig(const Dmat& m) {
  require_nonzero(m);
  const double top = m.max_eigenvalue();
  if (top <= 1.0) return m.as_normalized();
  return m.scaled(1.0 / top).as_normalized();
}

Dmat scale_to_unit_max_eig(const Dmat& m) {
  require_nonzero(m);
  return m.scaled(1.0 / m.max_eigenvalue()).as_normalized();
}

bool loewner_leq(const Matrix& a, const Matrix& b, double tol) {
  require_same_dim(a, b);
  return min_eigenvalue(b - a) >= -tol;
}

bool loewner_leq(const Dmat& a, const Dmat& b, double tol) { return loewner_leq(a.matrix(), b.matrix(), tol); }

namespace {

Dmat indicator(const Dmat& m, double rank_tol, bool on_support) {
  const auto& s = m.spectrum();
  std::vector<double> values(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) values[i] = (s.is_support(i, rank_tol) == on_support) ? 1.0 : 0.0;
  return Dmat::from_spectrum(s, values);
}

}  // namespace

Dmat support_projector(const Dmat& m, double rank_tol) { return indicator(m, rank_tol, true); }

Dmat kernel_projector(const Dmat& m, double rank_tol) { return indicator(m, rank_tol, false); }

Dmat sqrt_psd(const Dmat& m) {
  const auto& s = m.spectrum();
  std::vector<double> roots(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) roots[i] = std::sqrt(std::max(0.0, s.eigenvalue(i)));
  return Dmat::from_spectrum(s, roots);
}

}  // namespace dmsem
