#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "dmsem/error.hpp"
#include "dmsem/verify.hpp"

using namespace dmsem;

namespace {

TEST(Verify, RejectsBadArguments) {
  EXPECT_THROW(verify_theorems(0, 0), Error);
  VerifyOptions opt;
  opt.min_dim = 5;
  opt.max_dim = 4;
  EXPECT_THROW(verify_theorems(0, 10, opt), Error);
}

TEST(Verify, SameSeedSameReport) {
  const auto a = verify_theorems(3, 5);
  const auto b = verify_theorems(3, 5);
  ASSERT_EQ(a.suites.size(), b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    EXPECT_EQ(a.suites[i].name, b.suites[i].name);
    EXPECT_EQ(a.suites[i].passed, b.suites[i].passed);
    EXPECT_EQ(a.suites[i].worst_residual, b.suites[i].worst_residual);
  }
}

TEST(Verify, ReportFormat) {
  VerifyReport r;
  r.suites.push_back({"a.b", 3, 0, 1e-12, ""});
  r.suites.push_back({"c.d", 1, 2, 0.5, "counterexample"});
  std::ostringstream out;
  write_report(out, r);
  const std::string s = out.str();
  EXPECT_TRUE(std::regex_search(s, std::regex(R"(PASS a\.b +3/3 +worst 1e-12\n)")));
  EXPECT_TRUE(std::regex_search(s, std::regex(R"(FAIL c\.d +1/3 +worst 0\.5  counterexample\n)")));
  EXPECT_NE(s.find("1/2 suites passed"), std::string::npos);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures(), 1u);
}

// A phaser that ignores its structural operand must be caught.
TEST(Verify, BrokenPhaserIsDetected) {
  VerifyOptions opt;
  opt.phaser_override = [](const Dmat& a, const Dmat&) { return a; };
  EXPECT_FALSE(suites::support_maximally_mixed(1, 20, opt).ok());
  const auto honest = suites::support_maximally_mixed(1, 20);
  EXPECT_TRUE(honest.ok()) << honest.note;
}

TEST(Verify, CounterexampleSearchRecordsWitness) {
  const auto s = suites::order_counterexample(CompositionKind::phaser, 9);
  ASSERT_TRUE(s.ok());
  EXPECT_FALSE(s.note.empty());
}

}  // namespace
