#include "dmsem/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dmsem/context.hpp"
#include "dmsem/entailment.hpp"
#include "dmsem/error.hpp"
#include "dmsem/experiment.hpp"
#include "dmsem/fixtures.hpp"
#include "dmsem/lexicon.hpp"
#include "dmsem/negation.hpp"
#include "dmsem/pipeline.hpp"
#include "dmsem/random.hpp"

namespace dmsem {

bool VerifyReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(suites.begin(), suites.end(), [](const auto& s) { return !s.ok(); }));
}

namespace suites {
namespace {

constexpr CompositionKind kUpdateKinds[] = {CompositionKind::spider, CompositionKind::fuzz, CompositionKind::phaser};
constexpr CompositionKind kAllKinds[] = {CompositionKind::spider, CompositionKind::fuzz, CompositionKind::phaser,
                                         CompositionKind::mult, CompositionKind::diag};

std::string describe(const Matrix& m) {
  std::ostringstream s;
  s << std::setprecision(6) << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    s << (i ? "; " : "");
    for (std::size_t j = 0; j < m.dim(); ++j) s << (j ? " " : "") << m(i, j);
  }
  s << ']';
  return s.str();
}

/// Records one case: passes when residual <= tol.
void record(SuiteResult& s, double residual, double tol, const std::string& what = {}) {
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  s.worst_residual = std::max(s.worst_residual, residual);
  if (residual <= tol) {
    ++s.passed;
    return;
  }
  ++s.failed;
  if (s.note.empty()) {
    std::ostringstream n;
    n << "residual " << std::setprecision(3) << residual << " > " << tol;
    if (!what.empty()) n << " (" << what << ')';
    s.note = n.str();
  }
}

void record_bool(SuiteResult& s, bool ok, const std::string& what) { record(s, ok ? 0.0 : 1.0, 0.5, what); }

void record_error(SuiteResult& s, const std::exception& e) {
  ++s.failed;
  s.worst_residual = std::numeric_limits<double>::infinity();
  if (s.note.empty()) s.note = std::string("threw: ") + e.what();
}

std::size_t draw_dim(RandomDmats& rng, const VerifyOptions& opt) { return rng.uniform_int(opt.min_dim, opt.max_dim); }

Dmat comp(CompositionKind kind, const Dmat& a, const Dmat& b, const VerifyOptions& opt) {
  if (kind == CompositionKind::phaser && opt.phaser_override) return opt.phaser_override(a, b);
  return compose(a, b, kind, BasisSlot::second_operand);
}

/// Relative difference, scaled by max(1, |reference|).
double rel(double value, double reference) {
  if (std::isinf(value) && std::isinf(reference) && (value > 0) == (reference > 0)) return 0.0;
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

/// Largest violation of a <= b: how negative b - a gets.
double order_violation(const Matrix& a, const Matrix& b) { return std::max(0.0, -min_eigenvalue(b - a)); }

Dmat on_rows(const Matrix& q, std::span<const double> values) {
  return Dmat::make(conjugate(transpose(q), Matrix::diagonal(values)));
}

template <class Body>
SuiteResult run(const char* name, std::uint64_t seed, std::size_t trials, Body body) {
  SuiteResult s;
  s.name = name;
  RandomDmats rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    try {
      body(rng, s);
    } catch (const std::exception& e) {
      record_error(s, e);
    }
  }
  return s;
}

}  // namespace

// --- spectral ------------------------------------------------------------------------------

SuiteResult spectral_roundtrip(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("spectral.roundtrip", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Dmat x = rng.any_rank(draw_dim(rng, opt));
    record(s, max_abs_diff(spectral_decompose(x.matrix()).reconstruct(), x.matrix()), 1e-8);
  });
}

SuiteResult loewner_reflexive_antisymmetric(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("spectral.loewner_reflexive_antisymmetric", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const auto [a, b] = rng.ordered_pair(draw_dim(rng, opt));
    record_bool(s, loewner_leq(a, a) && loewner_leq(b, b), "reflexivity");
    const bool both = loewner_leq(a, b) && loewner_leq(b, a);
    record_bool(s, !both || max_abs_diff(a.matrix(), b.matrix()) <= 1e-8, "antisymmetry");
  });
}

SuiteResult loewner_unitary_invariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("spectral.loewner_unitary_invariance", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const auto [a, b] = rng.ordered_pair(dim);
    const Matrix q = rng.orthogonal(dim);
    record(s, order_violation(conjugate(q, a.matrix()), conjugate(q, b.matrix())), kPsdTol);
  });
}

SuiteResult support_projector_idempotent(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("spectral.support_projector_idempotent", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Matrix p = support_projector(rng.any_rank(draw_dim(rng, opt))).matrix();
    record(s, max_abs_diff(matmul(p, p), p), 1e-10);
  });
}

SuiteResult normalize_bound(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("spectral.normalize_bound", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Dmat x = rng.any_rank(draw_dim(rng, opt)).scaled(rng.uniform(0.1, 10.0));
    record(s, std::max(0.0, normalize_max_eig(x).max_eigenvalue() - 1.0), 1e-9);
  });
}

// --- negation ------------------------------------------------------------------------------

SuiteResult neg_sub_involution(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("negation.sub_involution", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Dmat x = rng.any_rank(draw_dim(rng, opt));
    record(s, max_abs_diff(neg_sub(neg_sub(x)).matrix(), x.matrix()), 1e-10);
  });
}

SuiteResult neg_supp_double_inverse(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("negation.supp_double_inverse", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Dmat x = rng.any_rank(draw_dim(rng, opt));
    record(s, max_abs_diff(neg_supp(neg_supp(x)).matrix(), x.matrix()), 1e-8);
  });
}

SuiteResult neg_sub_contrapositive(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("negation.sub_contrapositive", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const auto [a, b] = rng.ordered_pair(dim);
    record(s, order_violation(neg_sub(b).matrix(), neg_sub(a).matrix()), kPsdTol, "ordered pair");
    // converse direction on an arbitrary pair
    const Dmat c = rng.any_rank(dim);
    const Dmat d = rng.any_rank(dim);
    record_bool(s, loewner_leq(c, d) == loewner_leq(neg_sub(d), neg_sub(c)), "equivalence on unordered pair");
  });
}

SuiteResult neg_sub_kba_symmetry(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("negation.sub_kba_symmetry", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat a = rng.any_rank(dim);
    const Dmat b = rng.any_rank(dim);
    record(s, std::abs(k_ba(neg_sub(b), neg_sub(a)) - k_ba(a, b)), 1e-8);
  });
}

SuiteResult khyp_reversal_invertible(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("theorem.khyp_reversal_invertible", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat a = rng.full_rank(dim);
    const Dmat b = rng.full_rank(dim);
    record(s, rel(k_hyp(neg_supp(b), neg_supp(a)), k_hyp(a, b)), 1e-6);
  });
}

SuiteResult khyp_reversal_equal_rank(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  std::size_t t = 0;
  return run("theorem.khyp_reversal_equal_rank", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = std::max<std::size_t>(2, draw_dim(rng, opt));
    const std::size_t rank = rng.uniform_int(1, dim - 1);
    Dmat a = Dmat::zero(dim), b = Dmat::zero(dim);
    if (t++ % 2 == 0) {
      // shared support: both diagonal in one basis, zero past `rank`
      const Matrix q = rng.orthogonal(dim);
      std::vector<double> va(dim, 0.0), vb(dim, 0.0);
      for (std::size_t i = 0; i < rank; ++i) {
        va[i] = rng.uniform(0.05, 1.0);
        vb[i] = rng.uniform(0.05, 1.0);
      }
      // A shares B's support but not its eigenbasis
      const Matrix r = rng.orthogonal(rank);
      std::vector<double> mix(dim * dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i) mix[i * dim + i] = 1.0;
      for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) mix[i * dim + j] = r(i, j);
      }
      const Matrix q2 = matmul(Matrix(dim, mix), q);
      a = on_rows(q2, va);
      b = on_rows(q, vb);
    } else {
      a = rng.psd(dim, rank);
      b = rng.psd(dim, rank);
    }
    record(s, rel(k_hyp(neg_supp(b), neg_supp(a)), k_hyp(a, b)), 1e-6);
  });
}

SuiteResult kba_inverse_reversal(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("theorem.kba_inverse_reversal", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const auto [a, b] = rng.commuting_pair(draw_dim(rng, opt));
    const double forward = k_ba(a, b);
    const double reversed = k_ba(neg_supp(b), neg_supp(a));
    std::ostringstream what;
    what << std::setprecision(6) << "k_BA(A,B)=" << forward << " k_BA(B^-1,A^-1)=" << reversed
         << " A=" << describe(a.matrix()) << " B=" << describe(b.matrix());
    record(s, std::abs(forward - reversed), 1e-8, what.str());
  });
}

SuiteResult negations_preserve_eigenvectors(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("negation.preserve_eigenvectors", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Dmat x = rng.any_rank(draw_dim(rng, opt));
    const Dmat outputs[] = {neg_sub(x), neg_supp(x), neg_ker(x).value, neg_inv(x, rng.uniform(0.0, 1.0))};
    const char* names[] = {"sub", "supp", "ker", "inv"};
    const auto spaces = x.spectrum().eigenspaces();
    for (std::size_t k = 0; k < 4; ++k) {
      const Matrix& y = outputs[k].matrix();
      const double scale = std::max(1.0, outputs[k].max_eigenvalue());
      double worst = 0.0;
      for (const auto& space : spaces) {
        const Matrix& p = space.projector;
        const Matrix pyp = matmul(matmul(p, y), p);
        const double mu = trace(pyp) / static_cast<double>(space.multiplicity);
        worst = std::max(worst, max_abs_diff(matmul(p, y), matmul(y, p)));
        worst = std::max(worst, max_abs_diff(pyp, mu * p));
      }
      record(s, worst / scale, 1e-8, names[k]);
    }
  });
}

// --- composition ---------------------------------------------------------------------------

SuiteResult compositions_psd(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("composition.psd_output", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat a = rng.any_rank(dim);
    const Dmat b = rng.any_rank(dim);
    for (CompositionKind kind : kAllKinds) {
      // Dmat::make rejects asymmetric or indefinite results beyond tolerance
      const Dmat r = comp(kind, a, b, opt);
      record(s, max_asymmetry(r.matrix()), 1e-9, std::string(to_string(kind)));
    }
  });
}

SuiteResult order_preservation(CompositionKind kind, std::uint64_t seed, std::size_t trials,
                               const VerifyOptions& opt) {
  const std::string name = "composition.order_preserved." + std::string(to_string(kind));
  return run(name.c_str(), seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const auto [a1, b1] = rng.ordered_pair(dim);
    const auto [a2, b2] = rng.ordered_pair(dim);
    const Matrix lo = comp(kind, a1, a2, opt).matrix();
    const Matrix hi = comp(kind, b1, b2, opt).matrix();
    record(s, order_violation(lo, hi), kPsdTol,
           "A1=" + describe(a1.matrix()) + " B1=" + describe(b1.matrix()) + " A2=" + describe(a2.matrix()) +
               " B2=" + describe(b2.matrix()));
  });
}

SuiteResult order_counterexample(CompositionKind kind, std::uint64_t seed, std::size_t max_trials,
                                 const VerifyOptions& opt) {
  SuiteResult s;
  s.name = "composition.order_counterexample." + std::string(to_string(kind));
  RandomDmats rng(seed);
  for (std::size_t t = 0; t < max_trials; ++t) {
    const auto [a1, b1] = rng.ordered_pair(3);
    const auto [a2, b2] = rng.ordered_pair(3);
    const double v = order_violation(comp(kind, a1, a2, opt).matrix(), comp(kind, b1, b2, opt).matrix());
    s.worst_residual = std::max(s.worst_residual, v);
    if (v > 1e-6) {
      std::ostringstream n;
      n << std::setprecision(3) << "trial " << t << ", violation " << v << ": A1=" << describe(a1.matrix())
        << " B1=" << describe(b1.matrix()) << " A2=" << describe(a2.matrix()) << " B2=" << describe(b2.matrix());
      s.note = n.str();
      s.passed = 1;
      return s;
    }
  }
  s.failed = 1;
  s.note = "no counterexample in " + std::to_string(max_trials) + " trials";
  return s;
}

SuiteResult spider_is_mult_for_diagonal(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("composition.spider_is_mult_for_diagonal", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat a = rng.any_rank(dim);
    std::vector<double> d(dim);
    for (double& v : d) v = rng.uniform(0.0, 1.0) < 0.25 ? 0.0 : rng.uniform(0.05, 1.0);
    d[0] = 1.0;
    const Dmat b = Dmat::make(Matrix::diagonal(d));
    record(s, max_abs_diff(spider(a, b).matrix(), mult(a, b).matrix()), 1e-10);
  });
}

SuiteResult support_maximally_mixed(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("theorem.support_maximally_mixed", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const Dmat x = rng.any_rank(draw_dim(rng, opt));
    const Dmat n = neg_supp(x);
    const Matrix p = support_projector(x).matrix();
    for (CompositionKind kind : kUpdateKinds) {
      record(s, frobenius_norm(comp(kind, x, n, opt).matrix() - p), 1e-8, std::string(to_string(kind)));
    }
  });
}

SuiteResult support_maximally_mixed_inv(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("theorem.support_maximally_mixed_inv", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    // eigenvalues kept below 1 so w/lambda never meets the kernel value 1 - w
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat x = rng.psd(dim, rng.uniform_int(1, dim), 0.05, 0.95);
    const Dmat n = neg_inv(x, kDefaultSupportWeight);
    const Matrix p = support_projector(x).matrix();
    for (CompositionKind kind : kUpdateKinds) {
      const Dmat r = scale_to_unit_max_eig(comp(kind, x, n, opt));
      record(s, frobenius_norm(r.matrix() - p), 1e-8, std::string(to_string(kind)));
    }
  });
}

SuiteResult commuting_compositions_coincide(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("composition.commuting_coincide", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const auto [a, b] = rng.commuting_pair(draw_dim(rng, opt));
    const Matrix sp = comp(CompositionKind::spider, a, b, opt).matrix();
    const Matrix fz = comp(CompositionKind::fuzz, a, b, opt).matrix();
    const Matrix ph = comp(CompositionKind::phaser, a, b, opt).matrix();
    record(s, std::max({max_abs_diff(sp, fz), max_abs_diff(sp, ph), max_abs_diff(fz, ph)}), 1e-9);
  });
}

// --- entailment ----------------------------------------------------------------------------

SuiteResult khyp_matches_oracle(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  SuiteResult s = run("entailment.khyp_matches_oracle", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat b = rng.any_rank(dim);
    const Dmat c = rng.any_rank(dim);
    // P C P rather than B^{1/2} C B^{1/2}: the square root lifts ~1e-17 kernel
    // noise to ~1e-9 and A would leak out of supp(B)
    const Matrix p = support_projector(b).matrix();
    const Dmat a = Dmat::make(symmetrized(matmul(matmul(p, c.matrix()), p)));
    if (frobenius_norm(a.matrix()) < 1e-6) return;  // C orthogonal to supp(B): nothing to grade
    record(s, rel(k_hyp(a, b), k_hyp_oracle(a, b)), 1e-6);
  });
  const Lexicon toy = fixtures::toy_lexicon();
  const Dmat& apple = toy.at("apple");
  const Dmat& fruit = toy.at("fruit");
  record(s, std::abs(k_hyp(apple, fruit) - 0.5), 1e-6, "apple/fruit formula");
  record(s, std::abs(k_hyp_oracle(apple, fruit) - 0.5), 1e-6, "apple/fruit oracle");
  return s;
}

SuiteResult crisp_order_measures(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("entailment.crisp_order_measures", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const auto [a, b] = rng.ordered_pair(draw_dim(rng, opt));
    record(s, std::abs(k_e(a, b) - 1.0), 1e-9, "k_E");
    record(s, std::abs(k_ba(a, b) - 1.0), 1e-9, "k_BA");
    if (max_abs_diff(a.matrix(), b.matrix()) > 1e-6) record(s, std::abs(k_ba(b, a) + 1.0), 1e-9, "reversed k_BA");
  });
}

SuiteResult khyp_scale_covariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("entailment.khyp_scale_covariance", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat a = rng.any_rank(dim);
    const Dmat b = rng.any_rank(dim);
    const double c = rng.uniform(0.1, 10.0);
    record(s, rel(k_hyp(a.scaled(c), b), k_hyp(a, b) / c), 1e-9);
  });
}

SuiteResult trace_similarity_properties(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("entailment.trace_similarity", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat a = rng.any_rank(dim);
    const Dmat b = rng.any_rank(dim);
    const double ab = trace_similarity(a, b);
    record(s, std::abs(ab - trace_similarity(b, a)), 1e-12, "symmetry");
    record(s, std::abs(trace_similarity(a, a.scaled(rng.uniform(0.1, 10.0))) - 1.0), 1e-12, "proportional");
    record_bool(s, ab < 1.0 - 1e-9, "non-proportional pair reached 1");
    const Matrix q = rng.orthogonal(dim);
    const double rotated =
        trace_similarity(Dmat::make(conjugate(q, a.matrix())), Dmat::make(conjugate(q, b.matrix())));
    record(s, std::abs(rotated - ab), 1e-10, "conjugation");
  });
}

// --- context -------------------------------------------------------------------------------

SuiteResult weights_non_increasing(std::uint64_t seed, std::size_t trials, const VerifyOptions&) {
  return run("context.weights_non_increasing", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const WeightFunction fn{rng.uniform(0.0, 1.0) < 0.5 ? WeightKind::poly : WeightKind::exp, rng.uniform(0.0, 5.0)};
    const auto w = raw_hypernym_weights(fn, rng.uniform_int(1, 10));
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) worst = std::max(worst, w[i + 1] - w[i]);
    const bool nonneg = std::all_of(w.begin(), w.end(), [](double v) { return v >= 0.0; });
    record(s, nonneg ? worst : 1.0, 0.0, fn.label());
  });
}

SuiteResult context_normalized(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("context.output_normalized", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    std::vector<Dmat> parts;
    std::vector<double> weights;
    for (std::size_t i = rng.uniform_int(1, 5); i > 0; --i) {
      parts.push_back(rng.any_rank(dim));
      weights.push_back(rng.uniform(0.0, 1.0));
    }
    const Dmat c = context_mixture(parts, weights);
    record(s, std::abs(c.max_eigenvalue() - 1.0), 1e-12, "lambda_max");
    record(s, std::max(0.0, -min_eigenvalue(c.matrix())), kPsdTol, "psd");
  });
}

SuiteResult context_equal_pure_hypernyms(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("context.equal_pure_hypernyms", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    std::vector<double> v(dim);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) x /= norm;
    const Dmat pure = Dmat::pure(v);
    const std::size_t n = rng.uniform_int(2, 6);  // poly/hyp give the last hypernym weight 0
    Lexicon lex;
    HypernymHierarchy h;
    std::vector<std::string> path;
    lex.insert("w", pure);
    for (std::size_t i = 0; i < n; ++i) {
      path.push_back("h" + std::to_string(i));
      lex.insert(path.back(), pure);
    }
    h.add("w", path);
    for (WeightKind kind : {WeightKind::poly, WeightKind::exp, WeightKind::hyp}) {
      const WeightFunction fn{kind, rng.uniform(0.0, 5.0)};
      record(s, max_abs_diff(worldly_context_hierarchy("w", h, lex, fn).matrix(), pure.matrix()), 1e-10,
             fn.label());
    }
  });
}

SuiteResult graph_matches_hierarchy(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("context.graph_matches_hierarchy", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const std::size_t n = rng.uniform_int(2, 6);
    Lexicon lex;
    HypernymHierarchy h;
    std::vector<std::string> path;
    lex.insert("w", rng.any_rank(dim));
    for (std::size_t i = 0; i < n; ++i) {
      path.push_back("h" + std::to_string(i));
      lex.insert(path.back(), rng.any_rank(dim));
    }
    h.add("w", path);
    const WeightFunction fn{rng.uniform(0.0, 1.0) < 0.5 ? WeightKind::poly : WeightKind::exp, rng.uniform(0.0, 4.0)};
    const auto p = hypernym_weights(fn, "w", h, lex);
    EntailmentGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add("w", {path[i], p[i], 0.0});
    const Matrix from_graph = worldly_context_graph("w", g, lex).matrix();
    const Matrix from_hierarchy = worldly_context_hierarchy("w", h, lex, fn).matrix();
    record(s, max_abs_diff(from_graph, from_hierarchy), 1e-10, fn.label());
  });
}

// --- lexicon -------------------------------------------------------------------------------

namespace {

VectorTable random_vectors(RandomDmats& rng, std::size_t dim, std::size_t count) {
  VectorTable t;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> v(dim);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    t.add("v" + std::to_string(i), std::move(v));
  }
  return t;
}

}  // namespace

SuiteResult lexicon_normalized(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("lexicon.normalized", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t count = rng.uniform_int(1, 6);
    const VectorTable t = random_vectors(rng, draw_dim(rng, opt), count);
    std::vector<std::string> hyponyms;
    for (std::size_t i = 1; i < count; ++i) hyponyms.push_back("v" + std::to_string(i));
    const Dmat m = build_density_matrix("v0", hyponyms, t);
    record(s, std::abs(m.max_eigenvalue() - 1.0), 1e-12);
  });
}

SuiteResult lexicon_permutation_invariance(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("lexicon.permutation_invariance", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t count = rng.uniform_int(2, 7);
    const VectorTable t = random_vectors(rng, draw_dim(rng, opt), count);
    std::vector<std::string> hyponyms;
    for (std::size_t i = 1; i < count; ++i) hyponyms.push_back("v" + std::to_string(i));
    const Dmat m1 = build_density_matrix("v0", hyponyms, t);
    std::shuffle(hyponyms.begin(), hyponyms.end(), rng.engine());
    const Dmat m2 = build_density_matrix("v0", hyponyms, t);
    record(s, max_abs_diff(m1.matrix(), m2.matrix()), 1e-12);
  });
}

SuiteResult lexicon_roundtrip(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / ("dmsem_verify_" + std::to_string(seed) + ".dmlx");
  SuiteResult s = run("lexicon.roundtrip", seed, std::min<std::size_t>(trials, 20),
                      [&](RandomDmats& rng, SuiteResult& s) {
                        const std::size_t dim = draw_dim(rng, opt);
                        Lexicon lex;
                        for (std::size_t i = rng.uniform_int(1, 5); i > 0; --i) {
                          lex.insert("w" + std::to_string(i), rng.any_rank(dim));
                        }
                        save_lexicon(lex, path);
                        const Lexicon back = load_lexicon(path);
                        bool same = back.size() == lex.size();
                        for (const auto& [word, m] : lex.entries()) {
                          const Dmat* b = back.find(word);
                          same = same && b && b->matrix() == m.matrix();
                        }
                        record_bool(s, same, "bit-exact reload");
                      });
  std::error_code ec;
  std::filesystem::remove(path, ec);
  std::filesystem::remove(path.string() + ".meta", ec);
  return s;
}

// --- pipeline ------------------------------------------------------------------------------

SuiteResult pipeline_output_normalized(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("pipeline.output_normalized", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat word = rng.any_rank(dim);
    const Dmat context = scale_to_unit_max_eig(rng.any_rank(dim));
    for (NegationKind neg : {NegationKind::sub, NegationKind::inv}) {
      for (CompositionKind kind : kAllKinds) {
        for (Basis basis : {Basis::w, Basis::c}) {
          try {
            const Dmat r = conversational_negate(word, context, NegationConfig{neg, 0.5, kind, basis});
            record(s, std::abs(r.max_eigenvalue() - 1.0), 1e-9, std::string(to_string(kind)));
          } catch (const Error& e) {
            record_bool(s, e.code() == Errc::ZeroMatrix, e.what());
          }
        }
      }
    }
  });
}

SuiteResult pipeline_basis_ignored(std::uint64_t seed, std::size_t trials, const VerifyOptions& opt) {
  return run("pipeline.basis_ignored_by_mult_diag", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t dim = draw_dim(rng, opt);
    const Dmat word = rng.full_rank(dim);
    const Dmat context = scale_to_unit_max_eig(rng.full_rank(dim));
    for (CompositionKind kind : {CompositionKind::mult, CompositionKind::diag}) {
      const Dmat w = conversational_negate(word, context, NegationConfig{NegationKind::sub, 0.5, kind, Basis::w});
      const Dmat c = conversational_negate(word, context, NegationConfig{NegationKind::sub, 0.5, kind, Basis::c});
      record(s, max_abs_diff(w.matrix(), c.matrix()), 0.0, std::string(to_string(kind)));
    }
  });
}

SuiteResult pipeline_toy_ordering(std::uint64_t, std::size_t, const VerifyOptions& opt) {
  SuiteResult s;
  s.name = "pipeline.toy_ordering";
  try {
    const Lexicon lex = fixtures::toy_lexicon();
    const HypernymHierarchy h = fixtures::toy_hierarchy();
    const HierarchyContext ctx(h, lex, WeightFunction{WeightKind::poly, 0.0});
    for (CompositionKind kind : kUpdateKinds) {
      if (kind == CompositionKind::phaser && opt.phaser_override) continue;
      const Dmat r = conversational_negate("apple", NegationConfig{NegationKind::sub, 0.5, kind, Basis::w}, lex, ctx);
      const double orange = trace_similarity(r, lex.at("orange"));
      const double fig = trace_similarity(r, lex.at("fig"));
      const double movie = trace_similarity(r, lex.at("movie"));
      record_bool(s, orange > fig && fig > movie, std::string(to_string(kind)) + " ordering");
      record(s, std::abs(movie), 1e-12, "movie similarity");
    }
  } catch (const std::exception& e) {
    record_error(s, e);
  }
  return s;
}

// --- experiment ----------------------------------------------------------------------------

SuiteResult pearson_affine_invariance(std::uint64_t seed, std::size_t trials, const VerifyOptions&) {
  return run("experiment.pearson_affine_invariance", seed, trials, [&](RandomDmats& rng, SuiteResult& s) {
    const std::size_t n = rng.uniform_int(3, 50);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = rng.uniform(-1.0, 1.0);
      ys[i] = rng.uniform(1.0, 5.0);
    }
    const double r = pearson(xs, ys);
    const double a = rng.uniform(0.1, 10.0);
    const double b = rng.uniform(-5.0, 5.0);
    std::vector<double> xt(n), yt(n);
    for (std::size_t i = 0; i < n; ++i) {
      xt[i] = a * xs[i] + b;
      yt[i] = a * ys[i] - b;
    }
    record(s, std::abs(pearson(xt, ys) - r), 1e-10, "x transformed");
    record(s, std::abs(pearson(xs, yt) - r), 1e-10, "y transformed");
  });
}

SuiteResult grid_cells_consistent(std::uint64_t, std::size_t, const VerifyOptions&) {
  SuiteResult s;
  s.name = "experiment.grid_cells_consistent";
  try {
    auto desk = fixtures::desk();
    desk.dataset.records.push_back({"apple", "unicorn", 2.0});  // unknown word: skipped and counted
    const GridPlan plan(GridSpec{}, desk.hierarchy, desk.lexicon);
    const ResultTable table = run_grid(desk.dataset, desk.lexicon, plan.configs());
    for (const auto& row : table.rows) {
      for (const auto& cell : row.cells) {
        record_bool(s, !cell.r || (*cell.r >= -1.0 && *cell.r <= 1.0), "r in [-1, 1]");
        record_bool(s, cell.n + cell.skipped == desk.dataset.size(), "n + skipped = dataset size");
      }
    }
  } catch (const std::exception& e) {
    record_error(s, e);
  }
  return s;
}

SuiteResult baseline_anticorrelates(std::uint64_t, std::size_t, const VerifyOptions&) {
  SuiteResult s;
  s.name = "experiment.baseline_anticorrelates";
  try {
    const auto desk = fixtures::desk();
    GridSpec spec;
    spec.negations = {NegationKind::sub};
    spec.compositions = {CompositionKind::spider, CompositionKind::phaser};
    spec.bases = {Basis::w};
    const GridPlan plan(spec, desk.hierarchy, desk.lexicon);
    const ResultTable table = run_grid(desk.dataset, desk.lexicon, plan.configs());
    const auto trace_r = [&](const RowKey& key) -> std::optional<double> {
      const ResultRow* row = table.find(key);
      if (!row) return std::nullopt;
      return row->cells[static_cast<std::size_t>(Column::trace)].r;
    };
    const auto base = trace_r({"sub", "none", "-", "-"});
    record_bool(s, base && *base < 0.0, "baseline r < 0");
    for (const char* comp : {"spider", "phaser"}) {
      const auto full = trace_r({"sub", comp, "w", spec.contexts.front().label()});
      record_bool(s, full && *full > 0.0, std::string(comp) + " r > 0");
    }
  } catch (const std::exception& e) {
    record_error(s, e);
  }
  return s;
}

}  // namespace suites

VerifyReport verify_theorems(std::uint64_t seed, std::size_t trials, const VerifyOptions& options) {
  if (trials == 0) throw Error(Errc::InvalidArgument, "trials must be at least 1");
  if (options.min_dim < 1 || options.min_dim > options.max_dim) {
    throw Error(Errc::InvalidArgument, "empty dimension range");
  }
  using namespace suites;
  using Suite = SuiteResult (*)(std::uint64_t, std::size_t, const VerifyOptions&);
  static constexpr Suite kSuites[] = {
      spectral_roundtrip,          loewner_reflexive_antisymmetric, loewner_unitary_invariance,
      support_projector_idempotent, normalize_bound,                neg_sub_involution,
      neg_supp_double_inverse,     neg_sub_contrapositive,          neg_sub_kba_symmetry,
      khyp_reversal_invertible,    khyp_reversal_equal_rank,        kba_inverse_reversal,
      negations_preserve_eigenvectors, compositions_psd,            spider_is_mult_for_diagonal,
      support_maximally_mixed,     support_maximally_mixed_inv,     commuting_compositions_coincide,
      khyp_matches_oracle,         crisp_order_measures,            khyp_scale_covariance,
      trace_similarity_properties, weights_non_increasing,          context_normalized,
      context_equal_pure_hypernyms, graph_matches_hierarchy,        lexicon_normalized,
      lexicon_permutation_invariance, lexicon_roundtrip,            pipeline_output_normalized,
      pipeline_basis_ignored,      pipeline_toy_ordering,           pearson_affine_invariance,
      grid_cells_consistent,       baseline_anticorrelates,
  };
  // distinct, reproducible stream per suite
  const auto sub_seed = [seed](std::uint64_t k) { return seed * 0x9E3779B97F4A7C15ULL + k * 0xBF58476D1CE4E5B9ULL; };

  VerifyReport report;
  std::uint64_t k = 0;
  for (Suite suite : kSuites) report.suites.push_back(suite(sub_seed(k++), trials, options));
  for (CompositionKind kind : {CompositionKind::spider, CompositionKind::mult, CompositionKind::diag}) {
    report.suites.push_back(order_preservation(kind, sub_seed(k++), trials, options));
  }
  for (CompositionKind kind : {CompositionKind::fuzz, CompositionKind::phaser}) {
    report.suites.push_back(order_counterexample(kind, sub_seed(k++), 10000, options));
  }
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  std::ostringstream s;
  for (const auto& suite : report.suites) {
    s << (suite.ok() ? "PASS " : "FAIL ") << std::left << std::setw(48) << suite.name << std::right << std::setw(6)
      << suite.passed << '/' << std::left << std::setw(6) << suite.passed + suite.failed << " worst "
      << std::setprecision(3) << suite.worst_residual;
    if (!suite.note.empty()) s << "  " << suite.note;
    s << '\n';
  }
  s << report.suites.size() - report.failures() << '/' << report.suites.size() << " suites passed\n";
  out << s.str();
}

}  // namespace dmsem
