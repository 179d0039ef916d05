#pragma once

// Hypernym paths, one per word, nearest hypernym first.
//
// File format (UTF-8): one record per line, `word<TAB>h1,h2,...,hn`.
// Lines starting with `#` and blank lines are ignored.

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace dmsem {

class HypernymHierarchy {
 public:
  /// Throws DuplicateWord if `word` already has a path, SelfReference if it
  /// lists itself, ParseError on an empty path.
  void add(const std::string& word, std::vector<std::string> hypernyms);

  bool covers(const std::string& word) const { return paths_.contains(word); }
  /// Throws UnknownWord.
  const std::vector<std::string>& hypernyms(const std::string& word) const;
  const std::map<std::string, std::vector<std::string>>& paths() const noexcept { return paths_; }
  std::size_t size() const noexcept { return paths_.size(); }

  /// Words whose path contains `word`, sorted.
  std::vector<std::string> hyponyms(const std::string& word) const;
  /// Every word that appears anywhere, as a key or on a path, sorted.
  std::vector<std::string> vocabulary() const;

 private:
  std::map<std::string, std::vector<std::string>> paths_;
  std::map<std::string, std::vector<std::string>> hyponyms_;
};

HypernymHierarchy parse_hierarchy(std::istream& in);
HypernymHierarchy load_hierarchy(const std::filesystem::path& path);

}  // namespace dmsem
