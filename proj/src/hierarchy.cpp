#include "dmsem/hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "dmsem/error.hpp"
#include "text_util.hpp"

namespace dmsem {

void HypernymHierarchy::add(const std::string& word, std::vector<std::string> hypernyms) {
  if (word.empty()) throw Error(Errc::ParseError, "empty word");
  if (hypernyms.empty()) throw Error(Errc::ParseError, "empty hypernym list for '" + word + "'");
  if (paths_.contains(word)) throw Error(Errc::DuplicateWord, "'" + word + "' listed twice");
  std::set<std::string> seen;
  for (const auto& h : hypernyms) {
    if (h.empty()) throw Error(Errc::ParseError, "empty hypernym for '" + word + "'");
    if (h == word) throw Error(Errc::SelfReference, "'" + word + "' is its own hypernym");
    if (!seen.insert(h).second) throw Error(Errc::DuplicateWord, "'" + h + "' repeated on the path of '" + word + "'");
  }
  for (const auto& h : hypernyms) hyponyms_[h].push_back(word);
  paths_.emplace(word, std::move(hypernyms));
}

const std::vector<std::string>& HypernymHierarchy::hypernyms(const std::string& word) const {
  const auto it = paths_.find(word);
  if (it == paths_.end()) throw Error(Errc::UnknownWord, "'" + word + "' has no hypernym path");
  return it->second;
}

std::vector<std::string> HypernymHierarchy::hyponyms(const std::string& word) const {
  const auto it = hyponyms_.find(word);
  if (it == hyponyms_.end()) return {};
  std::vector<std::string> out = it->second;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> HypernymHierarchy::vocabulary() const {
  std::set<std::string> words;
  for (const auto& [word, path] : paths_) {
    words.insert(word);
    words.insert(path.begin(), path.end());
  }
  return {words.begin(), words.end()};
}

HypernymHierarchy parse_hierarchy(std::istream& in) {
  HypernymHierarchy h;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(Errc::ParseError, "expected word<TAB>hypernyms", line_no);
    const std::string word = text::trim(line.substr(0, tab));
    std::vector<std::string> path;
    for (auto& item : text::split(line.substr(tab + 1), ',')) {
      path.push_back(text::trim(item));
    }
    if (path.size() == 1 && path.front().empty()) path.clear();
    try {
      h.add(word, std::move(path));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
  }
  return h;
}

HypernymHierarchy load_hierarchy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IOError, "cannot open " + path.string());
  return parse_hierarchy(in);
}

}  // namespace dmsem
