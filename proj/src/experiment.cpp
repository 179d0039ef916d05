#include "dmsem/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "dmsem/error.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace dmsem {

// --- dataset ------------------------------------------------------------------------

PlausibilityDataset parse_dataset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty dataset", 1);
  text::strip_cr(line);
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (line != kDatasetHeader) {
    throw Error(Errc::ParseError, "expected header 'negated<TAB>alternative<TAB>mean_rating'", 1);
  }

  PlausibilityDataset data;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    text::strip_cr(line);
    if (text::trim(line).empty()) continue;
    const auto fields = text::split(line, '\t');
    if (fields.size() != 3) throw Error(Errc::ParseError, "expected 3 tab-separated fields", lineno);
    PlausibilityRecord rec{text::trim(fields[0]), text::trim(fields[1]), 0.0};
    if (rec.negated.empty() || rec.alternative.empty()) throw Error(Errc::ParseError, "empty word", lineno);
    const auto rating = text::parse_double(text::trim(fields[2]));
    if (!rating || !std::isfinite(*rating)) throw Error(Errc::ParseError, "bad rating '" + fields[2] + "'", lineno);
    if (*rating < 1.0 || *rating > 5.0) {
      throw Error(Errc::RatingOutOfRange, "rating " + fields[2] + " outside [1, 5]", lineno);
    }
    rec.rating = *rating;
    if (!seen.emplace(rec.negated, rec.alternative).second) {
      throw Error(Errc::DuplicatePair, rec.negated + " -> " + rec.alternative, lineno);
    }
    data.records.push_back(std::move(rec));
  }
  return data;
}

PlausibilityDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IOError, "cannot read " + path.string());
  return parse_dataset(in);
}

// --- statistics -----------------------------------------------------------------------

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw Error(Errc::DimensionMismatch, "pearson needs equal-length inputs");
  const std::size_t n = xs.size();
  if (n < 3) throw Error(Errc::InsufficientData, "pearson needs at least 3 points");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  // relative to the magnitudes involved, so constant-up-to-rounding lists count as constant
  const auto flat = [n](double ss, double mean) {
    return ss <= 1e-24 * std::max(1.0, mean * mean) * static_cast<double>(n);
  };
  if (flat(sxx, mx) || flat(syy, my)) throw Error(Errc::ZeroVariance, "pearson input has no variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// --- columns --------------------------------------------------------------------------

std::string_view to_string(Column c) noexcept {
  switch (c) {
    case Column::k_hyp1: return "k_hyp1";
    case Column::k_hyp2: return "k_hyp2";
    case Column::k_hyp1c: return "k_hyp1c";
    case Column::k_hyp2c: return "k_hyp2c";
    case Column::k_e1: return "k_E1";
    case Column::k_e2: return "k_E2";
    case Column::k_ba: return "k_BA";
    case Column::trace: return "trace";
  }
  return "?";
}

std::optional<Column> parse_column(std::string_view name) noexcept {
  for (Column c : kColumns) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

double column_score(Column c, const Dmat& negated, const Dmat& alternative) {
  switch (c) {
    case Column::k_hyp1: return plausibility(negated, alternative, Measure::k_hyp, Direction::forward);
    case Column::k_hyp2: return plausibility(negated, alternative, Measure::k_hyp, Direction::backward);
    case Column::k_hyp1c: return plausibility(negated, alternative, Measure::k_hyp_clamped, Direction::forward);
    case Column::k_hyp2c: return plausibility(negated, alternative, Measure::k_hyp_clamped, Direction::backward);
    case Column::k_e1: return plausibility(negated, alternative, Measure::k_e, Direction::forward);
    case Column::k_e2: return plausibility(negated, alternative, Measure::k_e, Direction::backward);
    case Column::k_ba: return plausibility(negated, alternative, Measure::k_ba, Direction::forward);
    case Column::trace: return plausibility(negated, alternative, Measure::trace_sim, Direction::forward);
  }
  throw Error(Errc::InvalidArgument, "unknown column");
}

// --- grid spec ------------------------------------------------------------------------

namespace {

std::vector<std::string> list_values(const std::string& value) {
  std::vector<std::string> out;
  for (const auto& item : text::split(value, ',')) {
    auto v = text::trim(item);
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

bool parse_bool(const std::string& value, std::size_t lineno) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw Error(Errc::ParseError, "expected true/false, got '" + value + "'", lineno);
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& value, std::size_t lineno, Parse parse) {
  std::vector<T> out;
  for (const auto& item : list_values(value)) {
    const auto parsed = parse(item);
    if (!parsed) throw Error(Errc::ParseError, "unknown value '" + item + "'", lineno);
    if (std::find(out.begin(), out.end(), *parsed) == out.end()) out.push_back(*parsed);
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty list", lineno);
  return out;
}

}  // namespace

GridSpec parse_grid_spec(std::istream& in) {
  GridSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::strip_cr(line);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (text::trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "expected 'key = value'", lineno);
    const std::string key = text::trim(std::string_view(line).substr(0, eq));
    const std::string value = text::trim(std::string_view(line).substr(eq + 1));

    if (key == "negations") {
      spec.negations = parse_list<NegationKind>(value, lineno, parse_negation);
    } else if (key == "compositions") {
      spec.compositions = parse_list<CompositionKind>(value, lineno, parse_composition);
    } else if (key == "bases") {
      spec.bases = parse_list<Basis>(value, lineno, parse_basis);
    } else if (key == "contexts") {
      spec.contexts.clear();
      for (const auto& item : list_values(value)) {
        try {
          spec.contexts.push_back(WeightFunction::parse(item));
        } catch (const Error& e) {
          throw Error(Errc::ParseError, e.what(), lineno);
        }
      }
      if (spec.contexts.empty()) throw Error(Errc::ParseError, "empty list", lineno);
    } else if (key == "support_weight") {
      const auto w = text::parse_double(value);
      if (!w || *w < 0.0 || *w > 1.0) throw Error(Errc::ParseError, "support_weight must lie in [0, 1]", lineno);
      spec.support_weight = *w;
    } else if (key == "baseline") {
      spec.baseline = parse_bool(value, lineno);
    } else if (key == "drop_missing_hypernyms") {
      spec.drop_missing_hypernyms = parse_bool(value, lineno);
    } else {
      throw Error(Errc::ParseError, "unknown key '" + key + "'", lineno);
    }
  }
  return spec;
}

GridSpec load_grid_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IOError, "cannot read " + path.string());
  return parse_grid_spec(in);
}

GridPlan::GridPlan(const GridSpec& spec, const HypernymHierarchy& hierarchy, const Lexicon& lexicon) {
  for (const auto& fn : spec.contexts) {
    providers_.push_back(std::make_unique<HierarchyContext>(hierarchy, lexicon, fn, spec.drop_missing_hypernyms));
  }
  std::set<RowKey> seen;
  const auto push = [&](GridConfig cfg) {
    if (seen.insert(cfg.key).second) configs_.push_back(std::move(cfg));
  };
  for (NegationKind neg : spec.negations) {
    for (CompositionKind comp : spec.compositions) {
      for (Basis basis : spec.bases) {
        for (const auto& provider : providers_) {
          GridConfig cfg;
          cfg.negation = NegationConfig{neg, spec.support_weight, comp, basis};
          cfg.key = RowKey{std::string(to_string(neg)), std::string(to_string(comp)),
                           uses_basis(comp) ? std::string(to_string(basis)) : "-", provider->label()};
          cfg.context = provider.get();
          push(std::move(cfg));
        }
      }
    }
    if (spec.baseline) {
      GridConfig cfg;
      cfg.negation = NegationConfig{neg, spec.support_weight, CompositionKind::phaser, Basis::w};
      cfg.key = RowKey{std::string(to_string(neg)), "none", "-", "-"};
      push(std::move(cfg));
    }
  }
}

// --- grid evaluation -----------------------------------------------------------------

const ResultRow* ResultTable::find(const RowKey& key) const {
  for (const auto& row : rows) {
    if (row.key == key) return &row;
  }
  return nullptr;
}

namespace {

bool skippable(Errc code) {
  return code == Errc::UnknownWord || code == Errc::IsolatedWord || code == Errc::MissingMatrix ||
         code == Errc::ZeroMatrix;
}

std::optional<std::array<double, kColumnCount>> score_pair(const GridConfig& cfg, const PlausibilityRecord& rec,
                                                           const Lexicon& lexicon) {
  try {
    const Dmat& alternative = lexicon.at(rec.alternative);
    const Dmat negated = cfg.context ? conversational_negate(rec.negated, cfg.negation, lexicon, *cfg.context)
                                     : logical_negation_only(rec.negated, cfg.negation, lexicon);
    std::array<double, kColumnCount> out{};
    for (std::size_t c = 0; c < kColumnCount; ++c) {
      try {
        out[c] = column_score(kColumns[c], negated, alternative);
      } catch (const Error& e) {
        if (e.code() != Errc::ZeroMatrix) throw;
        out[c] = std::numeric_limits<double>::quiet_NaN();
      }
    }
    return out;
  } catch (const Error& e) {
    if (skippable(e.code())) return std::nullopt;
    throw;
  }
}

Cell summarize(const ResultRow& row, std::size_t column, const PlausibilityDataset& dataset) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < row.scores.size(); ++i) {
    if (!row.scores[i]) continue;
    const double v = (*row.scores[i])[column];
    if (!std::isfinite(v)) continue;
    xs.push_back(v);
    ys.push_back(dataset.records[i].rating);
  }
  Cell cell;
  cell.n = xs.size();
  cell.skipped = dataset.size() - cell.n;
  try {
    cell.r = pearson(xs, ys);
  } catch (const Error& e) {
    if (e.code() != Errc::InsufficientData && e.code() != Errc::ZeroVariance) throw;
  }
  return cell;
}

}  // namespace

ResultTable run_grid(const PlausibilityDataset& dataset, const Lexicon& lexicon, std::span<const GridConfig> configs) {
  ResultTable table;
  table.rows.resize(configs.size());
  const std::size_t pairs = dataset.size();
  for (std::size_t r = 0; r < configs.size(); ++r) {
    table.rows[r].key = configs[r].key;
    table.rows[r].scores.resize(pairs);
  }
  detail::parallel_for(configs.size() * pairs, [&](std::size_t job) {
    const std::size_t r = job / pairs;
    const std::size_t i = job % pairs;
    table.rows[r].scores[i] = score_pair(configs[r], dataset.records[i], lexicon);
  });
  for (auto& row : table.rows) {
    for (std::size_t c = 0; c < kColumnCount; ++c) row.cells[c] = summarize(row, c, dataset);
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ResultRow& a, const ResultRow& b) { return a.key < b.key; });
  return table;
}

// --- reporting --------------------------------------------------------------------------

namespace {

std::string format_r(const std::optional<double>& r) {
  if (!r) return "null";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << *r;
  return s.str();
}

std::string format_score(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : "null";
  std::ostringstream s;
  s << std::setprecision(9) << v;
  return s.str();
}

}  // namespace

void write_result_csv(std::ostream& out, const ResultTable& table) {
  std::ostringstream s;
  s << "negation,composition,basis,context";
  for (Column c : kColumns) s << ',' << to_string(c) << "_r," << to_string(c) << "_n," << to_string(c) << "_skipped";
  s << '\n';
  for (const auto& row : table.rows) {
    s << row.key.negation << ',' << row.key.composition << ',' << row.key.basis << ',' << row.key.context;
    for (const auto& cell : row.cells) s << ',' << format_r(cell.r) << ',' << cell.n << ',' << cell.skipped;
    s << '\n';
  }
  out << s.str();
}

void write_scatter_csv(std::ostream& out, const ResultTable& table, const PlausibilityDataset& dataset) {
  std::ostringstream s;
  s << "negation,composition,basis,context,negated,alternative,rating";
  for (Column c : kColumns) s << ',' << to_string(c);
  s << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      const auto& rec = dataset.records[i];
      s << row.key.negation << ',' << row.key.composition << ',' << row.key.basis << ',' << row.key.context << ','
        << rec.negated << ',' << rec.alternative << ',' << rec.rating;
      for (std::size_t c = 0; c < kColumnCount; ++c) {
        s << ',' << (row.scores[i] ? format_score((*row.scores[i])[c]) : "null");
      }
      s << '\n';
    }
  }
  out << s.str();
}

void write_summary(std::ostream& out, const ResultTable& table, std::optional<double> highlight) {
  std::ostringstream s;
  s << std::left << std::setw(5) << "neg" << std::setw(8) << "comp" << std::setw(4) << "b" << std::setw(10) << "ctx";
  for (Column c : kColumns) s << std::right << std::setw(10) << to_string(c);
  s << std::right << std::setw(6) << "n" << '\n';
  for (const auto& row : table.rows) {
    s << std::left << std::setw(5) << row.key.negation << std::setw(8) << row.key.composition << std::setw(4)
      << row.key.basis << std::setw(10) << row.key.context << std::right;
    std::size_t n = 0;
    for (const auto& cell : row.cells) {
      std::string v = format_r(cell.r);
      if (highlight && cell.r && *cell.r >= *highlight) v += '*';
      s << std::setw(10) << v;
      n = std::max(n, cell.n);
    }
    s << std::setw(6) << n << '\n';
  }
  out << s.str();
}

}  // namespace dmsem
