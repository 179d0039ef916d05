#pragma once

// Logical negations of a density matrix. All of them keep the eigenvectors
// of the input and only rewrite its eigenvalues; none of them normalize.

#include "dmsem/spectral.hpp"

namespace dmsem {

/// I - X. Requires lambda_max(X) <= 1 (+1e-9), else NotNormalized.
Dmat neg_sub(const Dmat& x);

/// Moore-Penrose inverse: 1/lambda on the support, 0 on the kernel.
/// Throws ZeroMatrix for a rank-0 input.
Dmat neg_supp(const Dmat& x, double rank_tol = kRankTol);

struct KernelInverse {
  Dmat value;
  /// Set when the input had no kernel; `value` is then the zero matrix.
  bool input_invertible = false;
};

/// Projector onto the kernel of X.
KernelInverse neg_ker(const Dmat& x, double rank_tol = kRankTol);

inline constexpr double kDefaultSupportWeight = 0.5;

/// support_weight * neg_supp(X) + (1 - support_weight) * neg_ker(X), mixed
/// without renormalizing. Throws WeightOutOfRange outside [0, 1].
Dmat neg_inv(const Dmat& x, double support_weight = kDefaultSupportWeight, double rank_tol = kRankTol);

}  // namespace dmsem
