#pragma once

// Word vectors in, word density matrices out.
//
// Vector file: one word per line, `word v1 ... vd`, space separated. A
// leading `count dim` header line (word2vec text style) is skipped.
//
// Lexicon binary file, little-endian:
//   "DMLX1" | u32 word count | u32 dim |
//   per word: u16 byte length, UTF-8 bytes, dim*dim f64 row-major
// Provenance, when present, goes to a `<file>.meta` sidecar of
// `key = value` lines.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dmsem/hierarchy.hpp"
#include "dmsem/spectral.hpp"

namespace dmsem {

/// Exact lookup first, then the ASCII-lowercased word.
class VectorTable {
 public:
  /// Throws DimensionMismatch on a vector of a different length than the
  /// first one added. A repeated word keeps its first vector; returns false.
  bool add(const std::string& word, std::vector<double> vector);
  const std::vector<double>* find(const std::string& word) const;

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::map<std::string, std::vector<double>>& entries() const noexcept { return vectors_; }

 private:
  std::size_t dim_ = 0;
  std::map<std::string, std::vector<double>> vectors_;
};

VectorTable parse_vectors(std::istream& in);
VectorTable load_vectors(const std::filesystem::path& path);

/// FNV-1a 64 of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

inline constexpr const char* kDensityRecipe = "sum of unit outer products over word and hyponyms; max-eig normalized";

/// sum of v v^T over the unit vectors of `word` and every hyponym found in
/// the table (missing hyponyms are skipped), scaled to lambda_max <= 1.
/// Throws UnknownWord when `word` has no vector.
Dmat build_density_matrix(const std::string& word, std::span<const std::string> hyponyms, const VectorTable& vectors);

struct LexiconProvenance {
  std::string vectors_digest;
  std::string recipe;
};

class Lexicon {
 public:
  /// Stores the matrix flagged normalized. Throws NotNormalized when
  /// lambda_max > 1 + 1e-9, DimensionMismatch against existing entries.
  void insert(const std::string& word, const Dmat& matrix);

  bool contains(const std::string& word) const { return find(word) != nullptr; }
  /// Exact lookup, then lowercase fallback; nullptr when absent.
  const Dmat* find(const std::string& word) const;
  /// Throws UnknownWord.
  const Dmat& at(const std::string& word) const;

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return matrices_.size(); }
  bool empty() const noexcept { return matrices_.empty(); }
  const std::map<std::string, Dmat>& entries() const noexcept { return matrices_; }

  LexiconProvenance provenance;

 private:
  std::size_t dim_ = 0;
  std::map<std::string, Dmat> matrices_;
};

/// One matrix per word of hierarchy.vocabulary() and `extra_words` that has
/// a vector; hyponym sets come from inverting the hierarchy.
Lexicon build_lexicon(const VectorTable& vectors, const HypernymHierarchy& hierarchy,
                      std::span<const std::string> extra_words = {});

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);
/// Re-validates every matrix. Throws IOError, CorruptLexicon.
Lexicon load_lexicon(const std::filesystem::path& path);

/// `word<TAB>dim<TAB>row-major values`, 17 significant digits.
void write_matrix_text(std::ostream& out, const std::string& word, const Matrix& m);
void save_lexicon_text(const Lexicon& lexicon, std::ostream& out);

}  // namespace dmsem
