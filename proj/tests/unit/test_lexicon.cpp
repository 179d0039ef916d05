#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "dmsem/error.hpp"
#include "dmsem/lexicon.hpp"
#include "dmsem/verify.hpp"

using namespace dmsem;
namespace fs = std::filesystem;

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

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("dmsem_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Vectors, ParseSkipsHeaderAndFallsBackToLowercase) {
  std::istringstream in("2 3\nApple 1 0 0\nfruit 0.6 0.8 0\n");
  const VectorTable t = parse_vectors(in);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.dim(), 3u);
  ASSERT_NE(t.find("Apple"), nullptr);
  EXPECT_NE(t.find("FRUIT"), nullptr);
  EXPECT_EQ(t.find("pear"), nullptr);
}

TEST(Vectors, RaggedRowIsDimensionMismatch) {
  std::istringstream in("apple 1 0 0\nfruit 0.6 0.8\n");
  EXPECT_EQ(code_of([&] { parse_vectors(in); }), Errc::DimensionMismatch);
}

TEST(Vectors, NonNumericIsParseError) {
  std::istringstream in("apple 1 zero 0\n");
  EXPECT_EQ(code_of([&] { parse_vectors(in); }), Errc::ParseError);
}

TEST(DensityMatrix, SingleWordIsPureState) {
  VectorTable t;
  t.add("apple", {3, 4});
  const Dmat d = build_density_matrix("apple", {}, t);
  EXPECT_LE(max_abs_diff(d.matrix(), Matrix::from_rows({{0.36, 0.48}, {0.48, 0.64}})), 1e-15);
  EXPECT_TRUE(d.normalized());
}

TEST(DensityMatrix, HyponymsSummedAndScaled) {
  VectorTable t;
  t.add("fruit", {1, 0});
  t.add("apple", {0, 2});
  t.add("pear", {0, 1});
  const std::vector<std::string> hypos = {"apple", "pear", "missing"};
  const Dmat d = build_density_matrix("fruit", hypos, t);
  // e0 e0^T + 2 e1 e1^T, scaled by 1/2
  EXPECT_LE(max_abs_diff(d.matrix(), Matrix::diagonal({0.5, 1})), 1e-15);
  EXPECT_EQ(code_of([&] { build_density_matrix("unicorn", {}, t); }), Errc::UnknownWord);
}

TEST(Lexicon, BuildFromHierarchy) {
  VectorTable t;
  t.add("apple", {1, 0, 0});
  t.add("pear", {0, 1, 0});
  t.add("fruit", {0, 0, 1});
  HypernymHierarchy h;
  h.add("apple", {"fruit", "food"});
  h.add("pear", {"fruit", "food"});
  const Lexicon lex = build_lexicon(t, h);
  EXPECT_EQ(lex.size(), 3u);  // food has no vector
  EXPECT_FALSE(lex.contains("food"));
  EXPECT_LE(max_abs_diff(lex.at("fruit").matrix(), Matrix::identity(3)), 1e-15);
}

TEST(Lexicon, InsertRejectsUnnormalized) {
  Lexicon lex;
  EXPECT_EQ(code_of([&] { lex.insert("x", Dmat::diagonal({2, 0})); }), Errc::NotNormalized);
  lex.insert("x", Dmat::diagonal({1, 0}));
  EXPECT_EQ(code_of([&] { lex.insert("y", Dmat::identity(3)); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { lex.at("z"); }), Errc::UnknownWord);
}

TEST(Lexicon, BinaryRoundTripIsExact) {
  Lexicon lex;
  lex.insert("apple", Dmat::make(Matrix::from_rows({{0.36, 0.48}, {0.48, 0.64}})));
  lex.insert("fruit", Dmat::diagonal({0.5, 1.0 / 3}));
  lex.provenance = {"0123456789abcdef", kDensityRecipe};
  const fs::path p = temp_path("roundtrip.dmlx");
  save_lexicon(lex, p);
  const Lexicon back = load_lexicon(p);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back.at("apple").matrix(), lex.at("apple").matrix());
  EXPECT_EQ(back.at("fruit").matrix(), lex.at("fruit").matrix());
  EXPECT_EQ(back.provenance.vectors_digest, "0123456789abcdef");
  fs::remove(p);
  fs::remove(fs::path(p.string() + ".meta"));
}

TEST(Lexicon, TruncatedFileIsCorrupt) {
  Lexicon lex;
  lex.insert("apple", Dmat::diagonal({1, 0, 0}));
  const fs::path p = temp_path("truncated.dmlx");
  save_lexicon(lex, p);
  fs::resize_file(p, fs::file_size(p) - 5);
  EXPECT_EQ(code_of([&] { load_lexicon(p); }), Errc::CorruptLexicon);
  fs::remove(p);
}

TEST(Lexicon, BadMagicIsCorrupt) {
  const fs::path p = temp_path("magic.dmlx");
  std::ofstream(p, std::ios::binary) << "NOTALEXICON";
  EXPECT_EQ(code_of([&] { load_lexicon(p); }), Errc::CorruptLexicon);
  fs::remove(p);
  EXPECT_EQ(code_of([&] { load_lexicon(p); }), Errc::IOError);
}

TEST(Lexicon, TextDump) {
  std::ostringstream out;
  write_matrix_text(out, "x", Matrix::diagonal({1, 0.5}));
  EXPECT_EQ(out.str(), "x\t2\t1 0 0 0.5\n");
}

TEST(LexiconProperties, SuitesPass) {
  for (const auto& s : {suites::lexicon_normalized(1, 50), suites::lexicon_permutation_invariance(2, 50),
                        suites::lexicon_roundtrip(3, 10)}) {
    EXPECT_TRUE(s.ok()) << s.name << ": " << s.note;
  }
}

}  // namespace
