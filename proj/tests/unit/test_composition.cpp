#include <gtest/gtest.h>

#include "dmsem/composition.hpp"
#include "dmsem/error.hpp"
#include "dmsem/negation.hpp"
#include "dmsem/verify.hpp"

using namespace dmsem;

namespace {

const Matrix kPlus = Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});

void expect_near(const Dmat& got, const Matrix& want, double tol = 1e-14) {
  EXPECT_LE(max_abs_diff(got.matrix(), want), tol);
}

TEST(Spider, ToyNegatedApple) {
  expect_near(spider(Dmat::diagonal({0, 1, 1, 1}), Dmat::diagonal({1.0 / 2, 1.0 / 3, 1.0 / 6, 0})),
              Matrix::diagonal({0, 1.0 / 3, 1.0 / 6, 0}));
}

TEST(Spider, HadamardInStandardBasis) {
  expect_near(spider(Dmat::make(kPlus), Dmat::diagonal({1, 0.25})), Matrix::diagonal({0.5, 0.125}));
}

TEST(Spider, NonDiagonalStructuralOperand) {
  // B = |+><+|: only the |+> coefficient of A survives, A = diag(1, 0) gives 1/2 |+><+|
  expect_near(spider(Dmat::diagonal({1, 0}), Dmat::make(kPlus)), 0.5 * kPlus);
}

TEST(Fuzz, Examples) {
  expect_near(fuzz(Dmat::make(kPlus), Dmat::diagonal({1, 0.25})), Matrix::diagonal({0.5, 0.125}));
  expect_near(fuzz(Dmat::diagonal({0, 1, 1, 1}), Dmat::diagonal({1.0 / 2, 1.0 / 3, 1.0 / 6, 0})),
              Matrix::diagonal({0, 1.0 / 3, 1.0 / 6, 0}));
}

TEST(Fuzz, DegenerateEigenspaceKeepsCoherence) {
  // B = identity: one eigenspace, so fuzz(A, I) = A including off-diagonals
  expect_near(fuzz(Dmat::make(kPlus), Dmat::identity(2)), kPlus);
}

TEST(Phaser, Examples) {
  expect_near(phaser(Dmat::make(kPlus), Dmat::diagonal({1, 0.25})),
              Matrix::from_rows({{0.5, 0.25}, {0.25, 0.125}}));
  expect_near(phaser(Dmat::diagonal({0, 1, 1, 1}), Dmat::diagonal({1.0 / 2, 1.0 / 3, 1.0 / 6, 0})),
              Matrix::diagonal({0, 1.0 / 3, 1.0 / 6, 0}));
}

TEST(SupportMaximallyMixed, DiagonalExample) {
  const Dmat x = Dmat::diagonal({0.75, 0.5, 0});
  const Dmat n = neg_supp(x);
  for (auto kind : {CompositionKind::spider, CompositionKind::fuzz, CompositionKind::phaser}) {
    expect_near(compose(x, n, kind, BasisSlot::second_operand), Matrix::diagonal({1, 1, 0}));
  }
}

TEST(Mult, Examples) {
  const Dmat a = Dmat::make(kPlus);
  expect_near(mult(a, Dmat::diagonal({1, 0.25})), Matrix::diagonal({0.5, 0.125}));
  expect_near(mult(a, Dmat::identity(2)), Matrix::diagonal({0.5, 0.5}));
  const Dmat ones = Dmat::make(Matrix::from_rows({{1, 1}, {1, 1}}));
  expect_near(mult(a, ones), kPlus);
}

TEST(Diag, Examples) {
  const Dmat a = Dmat::make(kPlus);
  expect_near(diag_comp(a, Dmat::diagonal({1, 0.25})), Matrix::diagonal({0.5, 0.125}));
  const Dmat b = Dmat::make(Matrix::from_rows({{0.7, 0.2}, {0.2, 0.4}}));
  expect_near(diag_comp(Dmat::identity(2), b), Matrix::diagonal({0.7, 0.4}));
  const Dmat j = Dmat::make(Matrix::from_rows({{1, 1}, {1, 1}}));
  expect_near(diag_comp(a, j), Matrix::diagonal({0.5, 0.5}));
}

TEST(Compose, SlotPlacesStructuralOperand) {
  const Dmat neg = Dmat::make(Matrix::from_rows({{0.6, 0.2}, {0.2, 0.3}}));
  const Dmat wc = Dmat::diagonal({1, 0.25});
  expect_near(compose(neg, wc, CompositionKind::phaser, BasisSlot::first_operand), phaser(wc, neg).matrix(), 0.0);
  expect_near(compose(neg, wc, CompositionKind::phaser, BasisSlot::second_operand), phaser(neg, wc).matrix(), 0.0);
  expect_near(compose(neg, wc, CompositionKind::mult, BasisSlot::first_operand),
              compose(neg, wc, CompositionKind::mult, BasisSlot::second_operand).matrix(), 0.0);
}

TEST(Compose, DimensionMismatch) {
  try {
    compose(Dmat::identity(2), Dmat::identity(3), CompositionKind::spider, BasisSlot::second_operand);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Compose, ParseNames) {
  for (auto kind : {CompositionKind::spider, CompositionKind::fuzz, CompositionKind::phaser, CompositionKind::mult,
                    CompositionKind::diag}) {
    EXPECT_EQ(parse_composition(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_composition("tensor"));
}

TEST(CompositionProperties, SuitesPass) {
  for (const auto& s : {suites::compositions_psd(1, 100), suites::spider_is_mult_for_diagonal(2, 100),
                        suites::support_maximally_mixed(3, 100), suites::support_maximally_mixed_inv(4, 100),
                        suites::commuting_compositions_coincide(5, 100),
                        suites::order_preservation(CompositionKind::mult, 6, 200),
                        suites::order_preservation(CompositionKind::diag, 7, 200),
                        suites::order_counterexample(CompositionKind::fuzz, 8),
                        suites::order_counterexample(CompositionKind::phaser, 9)}) {
    EXPECT_TRUE(s.ok()) << s.name << ": " << s.note;
  }
}

// Spider taken in B's eigenbasis is not monotone in B: A1 = B1 = |0><0|,
// A2 = 0.5|+><+| + 0.1|-><-| <= B2 = diag(1, 0.6), yet
// spider(B1, B2) - spider(A1, A2) = diag(1, 0) - [[.15, .1], [.1, .15]].
TEST(SpiderOrder, EigenbasisCounterexample) {
  const Dmat e0 = Dmat::diagonal({1, 0});
  const Dmat a2 = Dmat::make(Matrix::from_rows({{0.3, 0.2}, {0.2, 0.3}}));
  const Dmat b2 = Dmat::diagonal({1, 0.6});
  ASSERT_TRUE(loewner_leq(a2, b2));
  const Dmat lo = spider(e0, a2);
  const Dmat hi = spider(e0, b2);
  EXPECT_LE(max_abs_diff(lo.matrix(), Matrix::from_rows({{0.15, 0.1}, {0.1, 0.15}})), 1e-14);
  EXPECT_LE(max_abs_diff(hi.matrix(), Matrix::diagonal({1, 0})), 1e-14);
  EXPECT_FALSE(loewner_leq(lo, hi));
}

}  // namespace
