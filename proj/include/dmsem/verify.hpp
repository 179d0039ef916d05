#pragma once

// Seeded property suites over every module. Each suite is also callable on
// its own so tests can run one with a specific trial count.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dmsem/composition.hpp"
#include "dmsem/spectral.hpp"

namespace dmsem {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst_residual = 0.0;  // largest observed deviation, suite-specific units
  std::string note;             // first failure or recorded counterexample
  bool ok() const noexcept { return failed == 0 && passed > 0; }
};

struct VerifyOptions {
  std::size_t min_dim = 2;
  std::size_t max_dim = 8;
  /// Replaces phaser in the composition suites (mutation testing).
  std::function<Dmat(const Dmat&, const Dmat&)> phaser_override;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const noexcept;
  std::size_t failures() const noexcept;
};

/// Runs every suite with `trials` random cases each (counterexample searches
/// run up to 10,000 cases). Throws InvalidArgument when trials == 0 or the
/// dimension range is empty.
VerifyReport verify_theorems(std::uint64_t seed, std::size_t trials, const VerifyOptions& options = {});

void write_report(std::ostream& out, const VerifyReport& report);

namespace suites {

// spectral
SuiteResult spectral_roundtrip(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult loewner_reflexive_antisymmetric(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult loewner_unitary_invariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult support_projector_idempotent(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult normalize_bound(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// negation
SuiteResult neg_sub_involution(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult neg_supp_double_inverse(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult neg_sub_contrapositive(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult neg_sub_kba_symmetry(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
/// k_hyp(A, B) = k_hyp(neg_supp B, neg_supp A) on invertible pairs.
SuiteResult khyp_reversal_invertible(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
/// Same identity on equal-rank singular pairs, shared and distinct supports.
SuiteResult khyp_reversal_equal_rank(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
/// k_BA(B^-1, A^-1) = k_BA(A, B) on commuting invertible pairs.
SuiteResult kba_inverse_reversal(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult negations_preserve_eigenvectors(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// composition
SuiteResult compositions_psd(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
/// comp(A1, A2) <= comp(B1, B2) whenever A1 <= B1 and A2 <= B2.
SuiteResult order_preservation(CompositionKind kind, std::uint64_t seed, std::size_t trials,
                               const VerifyOptions& opt = {});
/// Passes when a violation of the above is found on dim-3 pairs within
/// `max_trials`; the counterexample goes into the note.
SuiteResult order_counterexample(CompositionKind kind, std::uint64_t seed, std::size_t max_trials = 10000,
                                 const VerifyOptions& opt = {});
SuiteResult spider_is_mult_for_diagonal(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
/// spider/fuzz/phaser(X, neg_supp X) = support_projector(X), Frobenius.
SuiteResult support_maximally_mixed(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
/// Same with neg_inv, after rescaling to lambda_max = 1.
SuiteResult support_maximally_mixed_inv(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult commuting_compositions_coincide(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// entailment
/// k_hyp = k_hyp_oracle when supp(A) is inside supp(B); includes the toy
/// apple/fruit pair (value 1/2).
SuiteResult khyp_matches_oracle(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult crisp_order_measures(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult khyp_scale_covariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult trace_similarity_properties(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// context
SuiteResult weights_non_increasing(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult context_normalized(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult context_equal_pure_hypernyms(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult graph_matches_hierarchy(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// lexicon
SuiteResult lexicon_normalized(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult lexicon_permutation_invariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult lexicon_roundtrip(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// pipeline
SuiteResult pipeline_output_normalized(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult pipeline_basis_ignored(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult pipeline_toy_ordering(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

// experiment
SuiteResult pearson_affine_invariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult grid_cells_consistent(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});
SuiteResult baseline_anticorrelates(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt = {});

}  // namespace suites

}  // namespace dmsem
