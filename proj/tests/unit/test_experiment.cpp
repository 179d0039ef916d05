#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "dmsem/error.hpp"
#include "dmsem/experiment.hpp"
#include "dmsem/fixtures.hpp"

using namespace dmsem;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

// Computational formula with raw sums, no centering pass.
double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  return static_cast<double>((n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Pearson, SmallExample) {
  const std::vector<double> x = {1, 2, 3, 4}, y = {1, 3, 2, 4};
  EXPECT_NEAR(pearson(x, y), 0.8, 1e-15);
  EXPECT_NEAR(pearson(x, y), pearson_oracle(x, y), 1e-15);
}

TEST(Pearson, MatchesOracleOnRandomData) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(3 + t), y(3 + t);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = g(rng);
      y[i] = 0.3 * x[i] + g(rng);
    }
    EXPECT_NEAR(pearson(x, y), pearson_oracle(x, y), 1e-12);
  }
}

TEST(Pearson, Errors) {
  const std::vector<double> a = {1, 2, 3}, b = {1, 2};
  EXPECT_EQ(code_of([&] { pearson(a, b); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { pearson(b, b); }), Errc::InsufficientData);
  const std::vector<double> flat = {0.7, 0.7, 0.7};
  EXPECT_EQ(code_of([&] { pearson(a, flat); }), Errc::ZeroVariance);
}

TEST(Dataset, Parse) {
  std::istringstream in("\xEF\xBB\xBFnegated\talternative\tmean_rating\napple\torange\t4.6\n\napple\tfig\t1\n");
  const auto d = parse_dataset(in);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.records[0].alternative, "orange");
  EXPECT_EQ(d.records[0].rating, 4.6);
}

TEST(Dataset, Errors) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_dataset(in);
  };
  const std::string header = "negated\talternative\tmean_rating\n";
  EXPECT_EQ(code_of([&] { parse("word\tother\trating\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse(header + "apple\torange\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse(header + "apple\torange\thigh\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse(header + "apple\torange\t5.5\n"); }), Errc::RatingOutOfRange);
  EXPECT_EQ(code_of([&] { parse(header + "apple\torange\t0.9\n"); }), Errc::RatingOutOfRange);
  EXPECT_EQ(code_of([&] { parse(header + "apple\torange\t3\napple\torange\t4\n"); }), Errc::DuplicatePair);
  try {
    parse(header + "apple\torange\t3\napple\tfig\tx\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(GridSpec, ParseAndErrors) {
  std::istringstream in(
      "# comment\nnegations = sub\ncompositions = phaser, mult\nbases = w\ncontexts = poly:2, exp:10\n"
      "support_weight = 0.25\nbaseline = false\n");
  const GridSpec s = parse_grid_spec(in);
  EXPECT_EQ(s.negations.size(), 1u);
  EXPECT_EQ(s.compositions.size(), 2u);
  EXPECT_EQ(s.contexts.size(), 2u);
  EXPECT_EQ(s.support_weight, 0.25);
  EXPECT_FALSE(s.baseline);
  std::istringstream bad("negations = sub\nshape = round\n");
  try {
    parse_grid_spec(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream bad_value("compositions = tensor\n");
  EXPECT_EQ(code_of([&] { parse_grid_spec(bad_value); }), Errc::ParseError);
}

TEST(GridPlan, DefaultGridCollapsesBasisFreeCompositions) {
  const auto desk = fixtures::desk();
  const GridPlan plan(GridSpec{}, desk.hierarchy, desk.lexicon);
  // per negation: 3 basis-dependent x 2 bases + mult + diag + baseline
  EXPECT_EQ(plan.configs().size(), 18u);
  std::size_t baselines = 0;
  for (const auto& c : plan.configs()) {
    if (c.context == nullptr) {
      ++baselines;
      EXPECT_EQ(c.key.composition, "none");
    }
    if (c.key.composition == "mult" || c.key.composition == "diag") EXPECT_EQ(c.key.basis, "-");
  }
  EXPECT_EQ(baselines, 2u);
}

TEST(RunGrid, DeskFixtureCorrelations) {
  const auto desk = fixtures::desk();
  const GridPlan plan(GridSpec{}, desk.hierarchy, desk.lexicon);
  const ResultTable table = run_grid(desk.dataset, desk.lexicon, plan.configs());
  ASSERT_EQ(table.rows.size(), 18u);
  const auto trace_r = [&](RowKey key) {
    const ResultRow* row = table.find(key);
    EXPECT_NE(row, nullptr);
    return row ? row->cells[static_cast<std::size_t>(Column::trace)].r : std::nullopt;
  };
  const auto phaser = trace_r({"sub", "phaser", "w", "poly:2"});
  const auto spider = trace_r({"sub", "spider", "w", "poly:2"});
  const auto base = trace_r({"sub", "none", "-", "-"});
  ASSERT_TRUE(phaser && spider && base);
  EXPECT_GT(*phaser, 0.9);
  EXPECT_GT(*spider, 0.9);
  EXPECT_LT(*base, 0.0);
  for (const auto& row : table.rows) {
    for (const auto& cell : row.cells) EXPECT_EQ(cell.n + cell.skipped, desk.dataset.size());
  }
}

TEST(RunGrid, UnknownWordsAreSkippedAndCounted) {
  auto desk = fixtures::desk();
  desk.dataset.records.push_back({"apple", "unicorn", 2.0});
  desk.dataset.records.push_back({"unicorn", "apple", 2.0});
  GridSpec spec;
  spec.negations = {NegationKind::sub};
  spec.compositions = {CompositionKind::phaser};
  spec.bases = {Basis::w};
  spec.baseline = false;
  const GridPlan plan(spec, desk.hierarchy, desk.lexicon);
  const ResultTable table = run_grid(desk.dataset, desk.lexicon, plan.configs());
  ASSERT_EQ(table.rows.size(), 1u);
  const Cell& c = table.rows[0].cells[static_cast<std::size_t>(Column::trace)];
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.skipped, 2u);
  EXPECT_FALSE(table.rows[0].scores[3].has_value());
}

TEST(RunGrid, ResultCsv) {
  const auto desk = fixtures::desk();
  GridSpec spec;
  spec.negations = {NegationKind::inv};
  spec.compositions = {};
  const GridPlan plan(spec, desk.hierarchy, desk.lexicon);
  const ResultTable table = run_grid(desk.dataset, desk.lexicon, plan.configs());
  std::ostringstream out;
  write_result_csv(out, table);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header.rfind("negation,composition,basis,context,k_hyp1_r,k_hyp1_n,k_hyp1_skipped,", 0), 0u);
  EXPECT_NE(header.find(",trace_r,trace_n,trace_skipped"), std::string::npos);
  // neg_inv of a pure state is flat, so the baseline has no variance to correlate
  EXPECT_EQ(row.rfind("inv,none,-,-,", 0), 0u);
  EXPECT_NE(row.find("null"), std::string::npos);
}

TEST(Fixtures, ShippedFilesMatchEmbeddedCopies) {
  const std::string dir = std::string(DMSEM_SOURCE_DIR) + "/data/fixture/";
  EXPECT_EQ(slurp(dir + "vectors.txt"), fixtures::desk_vectors_text());
  EXPECT_EQ(slurp(dir + "hierarchy.tsv"), fixtures::desk_hierarchy_text());
  EXPECT_EQ(slurp(dir + "dataset.tsv"), fixtures::desk_dataset_text());
  EXPECT_NO_THROW(load_grid_spec(dir + "grid.conf"));
}

}  // namespace
