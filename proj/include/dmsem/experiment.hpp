#pragma once

// Plausibility-rating experiment: dataset ingestion, the configuration grid,
// Pearson correlation against human ratings, and CSV reporting.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmsem/context.hpp"
#include "dmsem/hierarchy.hpp"
#include "dmsem/lexicon.hpp"
#include "dmsem/pipeline.hpp"

namespace dmsem {

struct PlausibilityRecord {
  std::string negated;
  std::string alternative;
  double rating;  // mean human rating, 1..5
};

struct PlausibilityDataset {
  std::vector<PlausibilityRecord> records;
  std::size_t size() const noexcept { return records.size(); }
};

inline constexpr std::string_view kDatasetHeader = "negated\talternative\tmean_rating";

/// Header line must be exactly kDatasetHeader. Throws ParseError,
/// RatingOutOfRange (outside [1, 5]), DuplicatePair.
PlausibilityDataset parse_dataset(std::istream& in);
PlausibilityDataset load_dataset(const std::filesystem::path& path);

/// Product-moment correlation. Throws DimensionMismatch, InsufficientData
/// (fewer than 3 points), ZeroVariance.
double pearson(std::span<const double> xs, std::span<const double> ys);

enum class Column { k_hyp1, k_hyp2, k_hyp1c, k_hyp2c, k_e1, k_e2, k_ba, trace };
inline constexpr std::size_t kColumnCount = 8;
inline constexpr std::array<Column, kColumnCount> kColumns = {
    Column::k_hyp1, Column::k_hyp2, Column::k_hyp1c, Column::k_hyp2c,
    Column::k_e1,   Column::k_e2,   Column::k_ba,    Column::trace};

/// "k_hyp1", "k_hyp2", "k_hyp1c", "k_hyp2c", "k_E1", "k_E2", "k_BA", "trace"
std::string_view to_string(Column c) noexcept;
std::optional<Column> parse_column(std::string_view name) noexcept;

/// Score of one (negated output, alternative) pair for a column. k_BA is
/// read in direction 1.
double column_score(Column c, const Dmat& negated, const Dmat& alternative);

/// Grid axes, read from flat `key = value` text:
///   negations = sub, inv
///   compositions = spider, fuzz, phaser, mult, diag
///   bases = w, c
///   contexts = poly:2, exp:10
///   support_weight = 0.5
///   baseline = true
///   drop_missing_hypernyms = false
/// Lists are comma separated; '#' starts a comment.
struct GridSpec {
  std::vector<NegationKind> negations{NegationKind::sub, NegationKind::inv};
  std::vector<CompositionKind> compositions{CompositionKind::spider, CompositionKind::fuzz, CompositionKind::phaser,
                                            CompositionKind::mult, CompositionKind::diag};
  std::vector<Basis> bases{Basis::w, Basis::c};
  std::vector<WeightFunction> contexts{WeightFunction{WeightKind::poly, 2.0}};
  double support_weight = kDefaultSupportWeight;
  bool baseline = true;
  bool drop_missing_hypernyms = false;
};

/// Throws ParseError (with line number) on unknown keys or values.
GridSpec parse_grid_spec(std::istream& in);
GridSpec load_grid_spec(const std::filesystem::path& path);

struct RowKey {
  std::string negation;
  std::string composition;  // "none" for the baseline
  std::string basis;        // "-" when the composition ignores it
  std::string context;      // "-" for the baseline
  auto operator<=>(const RowKey&) const = default;
};

/// One grid row. `context` is null for the logical-negation-only baseline.
struct GridConfig {
  RowKey key;
  NegationConfig negation;
  const ContextProvider* context = nullptr;
};

/// Expanded grid owning its context providers. mult/diag rows collapse
/// across bases; one baseline row per negation when requested.
class GridPlan {
 public:
  GridPlan(const GridSpec& spec, const HypernymHierarchy& hierarchy, const Lexicon& lexicon);
  std::span<const GridConfig> configs() const noexcept { return configs_; }

 private:
  std::vector<std::unique_ptr<ContextProvider>> providers_;
  std::vector<GridConfig> configs_;
};

struct Cell {
  std::optional<double> r;  // null: fewer than 3 scored pairs or no variance
  std::size_t n = 0;        // pairs scored
  std::size_t skipped = 0;  // pairs not scored; n + skipped = dataset size
};

struct ResultRow {
  RowKey key;
  std::array<Cell, kColumnCount> cells;
  /// Per dataset record; empty optional when the pair was skipped, NaN
  /// entries where a single column could not be scored.
  std::vector<std::optional<std::array<double, kColumnCount>>> scores;
};

struct ResultTable {
  std::vector<ResultRow> rows;  // sorted by key
  const ResultRow* find(const RowKey& key) const;
};

/// Scores every record under every config. Pairs raising UnknownWord,
/// IsolatedWord, MissingMatrix or ZeroMatrix are skipped and counted;
/// non-finite single scores are skipped for that column only.
ResultTable run_grid(const PlausibilityDataset& dataset, const Lexicon& lexicon, std::span<const GridConfig> configs);

/// `<col>_r,<col>_n,<col>_skipped` per column, r to 4 decimals, `null` for
/// unevaluable cells.
void write_result_csv(std::ostream& out, const ResultTable& table);

/// Long-format per-pair scores for scatter plots.
void write_scatter_csv(std::ostream& out, const ResultTable& table, const PlausibilityDataset& dataset);

/// Fixed-width console table; r at or above `highlight` is starred.
void write_summary(std::ostream& out, const ResultTable& table, std::optional<double> highlight);

}  // namespace dmsem
