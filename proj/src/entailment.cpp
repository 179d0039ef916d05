#include "dmsem/entailment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dmsem/error.hpp"

namespace dmsem {

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::k_hyp: return "k_hyp";
    case Measure::k_hyp_clamped: return "k_hyp_clamped";
    case Measure::k_ba: return "k_BA";
    case Measure::k_e: return "k_E";
    case Measure::trace_sim: return "trace";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) noexcept {
  for (auto m : {Measure::k_hyp, Measure::k_hyp_clamped, Measure::k_ba, Measure::k_e, Measure::trace_sim}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

namespace {

void require_nonzero(const Dmat& m, const char* which) {
  if (frobenius_norm(m.matrix()) < 1e-12) throw Error(Errc::ZeroMatrix, std::string(which) + " is zero");
}

}  // namespace

double k_hyp(const Dmat& a, const Dmat& b, double rank_tol) {
  require_same_dim(a.matrix(), b.matrix());
  require_nonzero(a, "A");
  require_nonzero(b, "B");
  const auto& s = b.spectrum();
  std::vector<double> inv_root(s.dim(), 0.0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.is_support(i, rank_tol)) inv_root[i] = 1.0 / std::sqrt(s.eigenvalue(i));
  }
  const Matrix root = s.with_eigenvalues(inv_root);
  const double gamma = max_eigenvalue(symmetrized(matmul(matmul(root, a.matrix()), root)));
  if (gamma <= rank_tol) return std::numeric_limits<double>::infinity();
  return 1.0 / gamma;
}

double k_hyp_clamped(const Dmat& a, const Dmat& b, double rank_tol) {
  return std::min(k_hyp(a, b, rank_tol), 1.0);
}

double k_hyp_oracle(const Dmat& a, const Dmat& b, double tol) {
  require_same_dim(a.matrix(), b.matrix());
  const auto feasible = [&](double k) { return min_eigenvalue(b.matrix() - k * a.matrix()) >= -tol; };

  const auto& sa = a.spectrum();
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sa.dim(); ++i) {
    if (sa.is_support(i)) smallest = std::min(smallest, sa.eigenvalue(i));
  }
  if (!std::isfinite(smallest)) return std::numeric_limits<double>::infinity();

  double lo = 0.0;
  double hi = b.max_eigenvalue() / smallest + 1.0;
  if (!feasible(lo)) return 0.0;
  if (feasible(hi)) return hi;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

double k_ba(const Dmat& a, const Dmat& b) {
  require_same_dim(a.matrix(), b.matrix());
  const auto diff = eigh(b.matrix() - a.matrix());
  double signed_sum = 0.0;
  double abs_sum = 0.0;
  for (double v : diff.values) {
    signed_sum += v;
    abs_sum += std::abs(v);
  }
  if (abs_sum < 1e-12) return 1.0;
  return signed_sum / abs_sum;
}

double k_e(const Dmat& a, const Dmat& b, ErrorNorm norm) {
  require_same_dim(a.matrix(), b.matrix());
  require_nonzero(a, "A");
  const auto diff = eigh(b.matrix() - a.matrix());
  double error_norm = 0.0;
  double a_norm = 0.0;
  if (norm == ErrorNorm::frobenius) {
    for (double v : diff.values) {
      if (v < 0.0) error_norm += v * v;
    }
    error_norm = std::sqrt(error_norm);
    a_norm = frobenius_norm(a.matrix());
  } else {
    for (double v : diff.values) {
      if (v < 0.0) error_norm -= v;
    }
    a_norm = trace(a.matrix());
  }
  return std::clamp(1.0 - error_norm / a_norm, 0.0, 1.0);
}

double trace_similarity(const Dmat& a, const Dmat& b) {
  require_same_dim(a.matrix(), b.matrix());
  require_nonzero(a, "A");
  require_nonzero(b, "B");
  const double sim = frobenius_inner(a.matrix(), b.matrix()) /
                     (frobenius_norm(a.matrix()) * frobenius_norm(b.matrix()));
  return std::clamp(sim, 0.0, 1.0);
}

double score(Measure measure, const Dmat& a, const Dmat& b) {
  switch (measure) {
    case Measure::k_hyp: return k_hyp(a, b);
    case Measure::k_hyp_clamped: return k_hyp_clamped(a, b);
    case Measure::k_ba: return k_ba(a, b);
    case Measure::k_e: return k_e(a, b);
    case Measure::trace_sim: return trace_similarity(a, b);
  }
  throw Error(Errc::InvalidArgument, "unknown measure");
}

}  // namespace dmsem
