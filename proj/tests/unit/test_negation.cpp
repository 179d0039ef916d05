#include <gtest/gtest.h>

#include "dmsem/entailment.hpp"
#include "dmsem/error.hpp"
#include "dmsem/negation.hpp"
#include "dmsem/verify.hpp"

using namespace dmsem;

namespace {

void expect_diag(const Dmat& m, std::initializer_list<double> want, double tol = 1e-14) {
  EXPECT_LE(max_abs_diff(m.matrix(), Matrix::diagonal(want)), tol);
}

TEST(NegSub, Examples) {
  expect_diag(neg_sub(Dmat::diagonal({1, 0})), {0, 1});
  expect_diag(neg_sub(Dmat::diagonal({1, 0, 0, 0})), {0, 1, 1, 1});
  expect_diag(neg_sub(Dmat::diagonal({0.5, 0})), {0.5, 1});
}

TEST(NegSub, RejectsUnnormalizedInput) {
  try {
    neg_sub(Dmat::diagonal({2, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormalized);
  }
}

TEST(NegSupp, Examples) {
  expect_diag(neg_supp(Dmat::diagonal({0.5, 0})), {2, 0});
  expect_diag(neg_supp(Dmat::identity(3)), {1, 1, 1});
  expect_diag(neg_supp(Dmat::diagonal({0.5, 0.25, 0})), {2, 4, 0});
}

TEST(NegSupp, ZeroMatrix) {
  EXPECT_THROW(neg_supp(Dmat::zero(2)), Error);
}

TEST(NegKer, Examples) {
  expect_diag(neg_ker(Dmat::diagonal({0.5, 0})).value, {0, 1});
  expect_diag(neg_ker(Dmat::diagonal({0.5, 0.25, 0})).value, {0, 0, 1});
  expect_diag(neg_ker(neg_ker(Dmat::diagonal({0.5, 0})).value).value, {1, 0});
}

TEST(NegKer, InvertibleInputGivesZeroAndFlag) {
  const auto k = neg_ker(Dmat::diagonal({0.5, 0.25}));
  EXPECT_TRUE(k.input_invertible);
  expect_diag(k.value, {0, 0});
  EXPECT_FALSE(neg_ker(Dmat::diagonal({0.5, 0})).input_invertible);
}

TEST(NegInv, Examples) {
  expect_diag(neg_inv(Dmat::diagonal({0.5, 0}), 0.5), {1, 0.5});
  const Dmat x = Dmat::make(Matrix::from_rows({{0.6, 0.2}, {0.2, 0.3}}));
  EXPECT_LE(max_abs_diff(neg_inv(x, 1.0).matrix(), neg_supp(x).matrix()), 1e-14);
  expect_diag(neg_inv(Dmat::diagonal({0.5, 0}), 0.0), {0, 1});
}

TEST(NegInv, WeightOutOfRange) {
  for (double w : {-0.1, 1.1}) {
    try {
      neg_inv(Dmat::diagonal({0.5, 0}), w);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::WeightOutOfRange);
    }
  }
}

TEST(NegationProperties, SuitesPass) {
  for (const auto& s : {suites::neg_sub_involution(1, 100), suites::neg_supp_double_inverse(2, 100),
                        suites::neg_sub_contrapositive(3, 100), suites::neg_sub_kba_symmetry(4, 100),
                        suites::khyp_reversal_invertible(5, 100), suites::khyp_reversal_equal_rank(6, 100),
                        suites::negations_preserve_eigenvectors(7, 100)}) {
    EXPECT_TRUE(s.ok()) << s.name << ": " << s.note;
  }
}

// k_BA(B^-1, A^-1) = k_BA(A, B) does not hold for commuting pairs in general.
// Worked instance: A = diag(1, 1/4), B = diag(1/2, 1/2).
TEST(KbaInverseReversal, CounterexampleOnDiagonalPair) {
  const Dmat a = Dmat::diagonal({1, 0.25});
  const Dmat b = Dmat::diagonal({0.5, 0.5});
  // B - A = diag(-1/2, 1/4): (-1/4) / (3/4)
  EXPECT_NEAR(k_ba(a, b), -1.0 / 3, 1e-14);
  // A^-1 - B^-1 = diag(1, 4) - diag(2, 2) = diag(-1, 2): 1/3
  EXPECT_NEAR(k_ba(neg_supp(b), neg_supp(a)), 1.0 / 3, 1e-14);
}

// When B - A is semidefinite both sides are +-1 and the identity does hold.
TEST(KbaInverseReversal, HoldsForOrderedCommutingPairs) {
  const Dmat a = Dmat::diagonal({0.2, 0.3, 0.5});
  const Dmat b = Dmat::diagonal({0.4, 0.9, 0.5});
  EXPECT_NEAR(k_ba(neg_supp(b), neg_supp(a)), k_ba(a, b), 1e-12);
  EXPECT_NEAR(k_ba(neg_supp(a), neg_supp(b)), k_ba(b, a), 1e-12);
}

}  // namespace
