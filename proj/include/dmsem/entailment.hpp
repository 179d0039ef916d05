#pragma once

// Graded entailment between density matrices. Every measure is read as
// "A entails B" with A the first argument.

#include <optional>
#include <string_view>

#include "dmsem/spectral.hpp"

namespace dmsem {

enum class Measure { k_hyp, k_hyp_clamped, k_ba, k_e, trace_sim };

std::string_view to_string(Measure m) noexcept;
std::optional<Measure> parse_measure(std::string_view name) noexcept;

/// Generalized k-hyponymy 1/gamma, gamma = lambda_max(B^+ A), computed as
/// lambda_max(B^{+1/2} A B^{+1/2}). The support inclusion check is skipped,
/// so the value may exceed 1. Returns +infinity when gamma <= rank_tol
/// (A vanishes on the support of B, so no k is ruled out by the formula).
/// Throws ZeroMatrix when A or B is zero.
double k_hyp(const Dmat& a, const Dmat& b, double rank_tol = kRankTol);

/// min(k_hyp, 1)
double k_hyp_clamped(const Dmat& a, const Dmat& b, double rank_tol = kRankTol);

/// Largest k with B - kA PSD (up to `tol`), by bisection on the minimum
/// eigenvalue. Independent of the pseudo-inverse route used by k_hyp.
double k_hyp_oracle(const Dmat& a, const Dmat& b, double tol = 1e-12);

/// sum(lambda) / sum(|lambda|) over the eigenvalues of B - A; 1 when A == B.
double k_ba(const Dmat& a, const Dmat& b);

enum class ErrorNorm { frobenius, trace };

/// 1 - ||E|| / ||A|| clamped to [0, 1], E the sign-flipped negative part of
/// B - A. Throws ZeroMatrix when A is zero.
double k_e(const Dmat& a, const Dmat& b, ErrorNorm norm = ErrorNorm::frobenius);

/// trace(AB) / (||A||_F ||B||_F). Throws ZeroMatrix.
double trace_similarity(const Dmat& a, const Dmat& b);

double score(Measure measure, const Dmat& a, const Dmat& b);

}  // namespace dmsem
