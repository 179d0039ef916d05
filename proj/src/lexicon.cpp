#include "dmsem/lexicon.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "dmsem/error.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace dmsem {

namespace {

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

template <class Map>
auto find_with_fallback(const Map& map, const std::string& word) -> const typename Map::mapped_type* {
  if (auto it = map.find(word); it != map.end()) return &it->second;
  const std::string lower = ascii_lower(word);
  if (lower != word) {
    if (auto it = map.find(lower); it != map.end()) return &it->second;
  }
  return nullptr;
}

bool is_count_header(const std::vector<std::string_view>& toks) {
  if (toks.size() != 2) return false;
  return std::all_of(toks.begin(), toks.end(), [](std::string_view t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  });
}

}  // namespace

// --- VectorTable --------------------------------------------------------------

bool VectorTable::add(const std::string& word, std::vector<double> vector) {
  if (vector.empty()) throw Error(Errc::ParseError, "'" + word + "' has no components");
  if (dim_ == 0) dim_ = vector.size();
  if (vector.size() != dim_) {
    throw Error(Errc::DimensionMismatch, "'" + word + "' has " + std::to_string(vector.size()) +
                                             " components, expected " + std::to_string(dim_));
  }
  return vectors_.emplace(word, std::move(vector)).second;
}

const std::vector<double>* VectorTable::find(const std::string& word) const {
  return find_with_fallback(vectors_, word);
}

VectorTable parse_vectors(std::istream& in) {
  VectorTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    const auto toks = text::tokens(line);
    if (toks.empty()) continue;
    if (line_no == 1 && is_count_header(toks)) continue;
    if (toks.size() < 2) throw Error(Errc::ParseError, "expected word followed by components", line_no);
    std::vector<double> v;
    v.reserve(toks.size() - 1);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto value = text::parse_double(toks[i]);
      if (!value || !std::isfinite(*value)) {
        throw Error(Errc::ParseError, "bad component '" + std::string(toks[i]) + "'", line_no);
      }
      v.push_back(*value);
    }
    try {
      table.add(std::string(toks[0]), std::move(v));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
  }
  return table;
}

VectorTable load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IOError, "cannot open " + path.string());
  return parse_vectors(in);
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IOError, "cannot open " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

// --- density matrices -----------------------------------------------------------

Dmat build_density_matrix(const std::string& word, std::span<const std::string> hyponyms,
                          const VectorTable& vectors) {
  const auto* own = vectors.find(word);
  if (own == nullptr) throw Error(Errc::UnknownWord, "no vector for '" + word + "'");

  // Sorted so the floating-point sum does not depend on input order.
  std::set<std::string> members(hyponyms.begin(), hyponyms.end());
  members.erase(word);

  Matrix sum(vectors.dim());
  const auto accumulate = [&](const std::vector<double>& v) {
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (norm == 0.0) return;
    std::vector<double> unit(v);
    for (double& x : unit) x /= norm;
    sum += Matrix::outer(unit);
  };
  accumulate(*own);
  for (const auto& h : members) {
    if (const auto* v = vectors.find(h)) accumulate(*v);
  }
  if (frobenius_norm(sum) == 0.0) throw Error(Errc::ZeroMatrix, "'" + word + "' has a zero vector");
  return normalize_max_eig(Dmat::make(sum));
}

// --- Lexicon --------------------------------------------------------------------

void Lexicon::insert(const std::string& word, const Dmat& matrix) {
  if (!matrices_.empty() && matrix.dim() != dim_) {
    throw Error(Errc::DimensionMismatch, "'" + word + "' has dim " + std::to_string(matrix.dim()) +
                                             ", lexicon has " + std::to_string(dim_));
  }
  if (word.size() > 0xFFFF) throw Error(Errc::InvalidArgument, "word too long");
  Dmat stored = matrix.as_normalized();
  dim_ = matrix.dim();
  matrices_.insert_or_assign(word, std::move(stored));
}

const Dmat* Lexicon::find(const std::string& word) const { return find_with_fallback(matrices_, word); }

const Dmat& Lexicon::at(const std::string& word) const {
  if (const Dmat* m = find(word)) return *m;
  throw Error(Errc::UnknownWord, "'" + word + "' not in lexicon");
}

Lexicon build_lexicon(const VectorTable& vectors, const HypernymHierarchy& hierarchy,
                      std::span<const std::string> extra_words) {
  std::set<std::string> wanted;
  for (const auto& w : hierarchy.vocabulary()) wanted.insert(w);
  wanted.insert(extra_words.begin(), extra_words.end());

  std::vector<std::string> words;
  for (const auto& w : wanted) {
    if (vectors.find(w) != nullptr) words.push_back(w);
  }

  std::vector<std::optional<Dmat>> built(words.size());
  detail::parallel_for(words.size(), [&](std::size_t i) {
    const auto hyponyms = hierarchy.hyponyms(words[i]);
    built[i] = build_density_matrix(words[i], hyponyms, vectors);
  });

  Lexicon lex;
  for (std::size_t i = 0; i < words.size(); ++i) lex.insert(words[i], *built[i]);
  lex.provenance.recipe = kDensityRecipe;
  return lex;
}

// --- persistence ------------------------------------------------------------------

namespace {

constexpr char kMagic[5] = {'D', 'M', 'L', 'X', '1'};

template <class T>
void put_le(std::string& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(std::begin(bytes), std::end(bytes));
  out.append(reinterpret_cast<const char*>(bytes), sizeof(T));
}

class Reader {
 public:
  explicit Reader(const std::string& buf) : buf_(buf) {}

  template <class T>
  T get() {
    need(sizeof(T));
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, buf_.data() + pos_, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(std::begin(bytes), std::end(bytes));
    pos_ += sizeof(T);
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
  }

  std::string bytes(std::size_t n) {
    need(n);
    std::string s = buf_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  bool done() const { return pos_ == buf_.size(); }

 private:
  void need(std::size_t n) const {
    if (buf_.size() - pos_ < n) throw Error(Errc::CorruptLexicon, "unexpected end of file");
  }

  const std::string& buf_;
  std::size_t pos_ = 0;
};

std::filesystem::path meta_path(const std::filesystem::path& path) {
  auto p = path;
  p += ".meta";
  return p;
}

}  // namespace

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  const std::size_t dim = lexicon.dim();
  std::string out(kMagic, sizeof kMagic);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(lexicon.size()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(dim));
  for (const auto& [word, m] : lexicon.entries()) {
    if (m.dim() != dim) throw Error(Errc::DimensionMismatch, "'" + word + "' has a different dimension");
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(word.size()));
    out += word;
    for (double v : m.matrix().values()) put_le<double>(out, v);
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::IOError, "cannot write " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw Error(Errc::IOError, "write failed for " + path.string());

  const auto& prov = lexicon.provenance;
  if (!prov.vectors_digest.empty() || !prov.recipe.empty()) {
    std::ofstream meta(meta_path(path), std::ios::trunc);
    if (!meta) throw Error(Errc::IOError, "cannot write " + meta_path(path).string());
    meta << "dim = " << dim << '\n';
    meta << "vectors_fnv1a64 = " << prov.vectors_digest << '\n';
    meta << "recipe = " << prov.recipe << '\n';
  }
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::IOError, "cannot open " + path.string());
  const std::string buf((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());

  Reader r(buf);
  if (r.bytes(sizeof kMagic) != std::string(kMagic, sizeof kMagic)) {
    throw Error(Errc::CorruptLexicon, "bad magic in " + path.string());
  }
  const auto count = r.get<std::uint32_t>();
  const auto dim = r.get<std::uint32_t>();
  if (count > 0 && dim == 0) throw Error(Errc::CorruptLexicon, "zero dimension");

  Lexicon lex;
  for (std::uint32_t w = 0; w < count; ++w) {
    const auto len = r.get<std::uint16_t>();
    std::string word = r.bytes(len);
    std::vector<double> values(static_cast<std::size_t>(dim) * dim);
    for (double& v : values) v = r.get<double>();
    if (lex.entries().contains(word)) {
      throw Error(Errc::CorruptLexicon, "'" + word + "' stored twice");
    }
    try {
      lex.insert(word, Dmat::make(Matrix(dim, std::move(values))));
    } catch (const Error& e) {
      throw Error(Errc::CorruptLexicon, "'" + word + "': " + e.what());
    }
  }
  if (!r.done()) throw Error(Errc::CorruptLexicon, "trailing bytes in " + path.string());

  if (std::ifstream meta(meta_path(path)); meta) {
    std::string line;
    while (std::getline(meta, line)) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const auto key = text::trim(line.substr(0, eq));
      const auto value = text::trim(line.substr(eq + 1));
      if (key == "vectors_fnv1a64") lex.provenance.vectors_digest = value;
      if (key == "recipe") lex.provenance.recipe = value;
    }
  }
  return lex;
}

void write_matrix_text(std::ostream& out, const std::string& word, const Matrix& m) {
  std::ostringstream line;
  line << std::setprecision(17);
  line << word << '\t' << m.dim() << '\t';
  bool first = true;
  for (double v : m.values()) {
    if (!first) line << ' ';
    line << v;
    first = false;
  }
  out << line.str() << '\n';
}

void save_lexicon_text(const Lexicon& lexicon, std::ostream& out) {
  for (const auto& [word, m] : lexicon.entries()) write_matrix_text(out, word, m.matrix());
}

}  // namespace dmsem
