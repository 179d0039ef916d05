#include "dmsem/negation.hpp"

#include <string>
#include <vector>

#include "dmsem/error.hpp"

namespace dmsem {

Dmat neg_sub(const Dmat& x) {
  const auto& s = x.spectrum();
  if (s.max_eigenvalue() > 1.0 + 1e-9) {
    throw Error(Errc::NotNormalized, "lambda_max = " + std::to_string(s.max_eigenvalue()));
  }
  std::vector<double> values(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) values[i] = 1.0 - s.eigenvalue(i);
  return Dmat::from_spectrum(s, values);
}

Dmat neg_supp(const Dmat& x, double rank_tol) {
  const auto& s = x.spectrum();
  if (s.rank(rank_tol) == 0) throw Error(Errc::ZeroMatrix, "support inverse of a rank-0 matrix");
  std::vector<double> values(s.dim(), 0.0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.is_support(i, rank_tol)) values[i] = 1.0 / s.eigenvalue(i);
  }
  return Dmat::from_spectrum(s, values);
}

KernelInverse neg_ker(const Dmat& x, double rank_tol) {
  const auto& s = x.spectrum();
  return {kernel_projector(x, rank_tol), s.rank(rank_tol) == s.dim()};
}

Dmat neg_inv(const Dmat& x, double support_weight, double rank_tol) {
  if (!(support_weight >= 0.0 && support_weight <= 1.0)) {
    throw Error(Errc::WeightOutOfRange, "support weight " + std::to_string(support_weight) + " outside [0, 1]");
  }
  const auto& s = x.spectrum();
  const bool has_support = s.rank(rank_tol) > 0;
  if (!has_support && support_weight > 0.0) throw Error(Errc::ZeroMatrix, "support inverse of a rank-0 matrix");
  std::vector<double> values(s.dim(), 0.0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    values[i] = s.is_support(i, rank_tol) ? support_weight / s.eigenvalue(i) : 1.0 - support_weight;
  }
  return Dmat::from_spectrum(s, values);
}

}  // namespace dmsem
