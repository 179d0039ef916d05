// dmsem: command-line front end for lexicon building, single negations,
// grid evaluation and the property suites.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dmsem/context.hpp"
#include "dmsem/error.hpp"
#include "dmsem/experiment.hpp"
#include "dmsem/hierarchy.hpp"
#include "dmsem/kernels.hpp"
#include "dmsem/lexicon.hpp"
#include "dmsem/pipeline.hpp"
#include "dmsem/verify.hpp"

namespace {

using namespace dmsem;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IOError, "cannot write " + path);
  return out;
}

struct BuildArgs {
  std::string vectors, hierarchy, out, dataset;
};

int cmd_build(const BuildArgs& a) {
  const VectorTable vectors = load_vectors(a.vectors);
  const HypernymHierarchy hierarchy = load_hierarchy(a.hierarchy);
  std::vector<std::string> extra;
  if (!a.dataset.empty()) {
    for (const auto& rec : load_dataset(a.dataset).records) {
      extra.push_back(rec.negated);
      extra.push_back(rec.alternative);
    }
  }
  Lexicon lex = build_lexicon(vectors, hierarchy, extra);
  lex.provenance = LexiconProvenance{file_digest(a.vectors), kDensityRecipe};
  save_lexicon(lex, a.out);
  std::cout << "wrote " << lex.size() << " matrices of dim " << lex.dim() << " to " << a.out << '\n';
  return 0;
}

struct NegateArgs {
  std::string lexicon, hierarchy, word;
  std::string negation = "sub", composition = "phaser", basis = "w", context_fn = "poly";
  double x = 2.0;
  double support_weight = kDefaultSupportWeight;
  std::size_t top = 5;
  bool text_out = false;
  bool drop_missing = false;
};

int cmd_negate(const NegateArgs& a) {
  const Lexicon lex = load_lexicon(a.lexicon);
  const HypernymHierarchy hierarchy = load_hierarchy(a.hierarchy);
  WeightFunction fn = WeightFunction::parse(a.context_fn);
  fn.x = a.x;
  const HierarchyContext context(hierarchy, lex, fn, a.drop_missing);
  const NegationConfig cfg{*parse_negation(a.negation), a.support_weight, *parse_composition(a.composition),
                           *parse_basis(a.basis)};
  const Dmat result = conversational_negate(a.word, cfg, lex, context);

  if (a.text_out) {
    write_matrix_text(std::cout, "not_" + a.word, result.matrix());
    return 0;
  }
  std::cout << "spectrum:";
  std::cout << std::setprecision(6);
  for (double v : result.spectrum().eigenvalues()) {
    if (v > kRankTol) std::cout << ' ' << v;
  }
  std::cout << "\nrank: " << result.spectrum().rank() << '\n';

  std::vector<std::pair<double, std::string>> ranked;
  for (const auto& [word, m] : lex.entries()) {
    if (word != a.word) ranked.emplace_back(trace_similarity(result, m), word);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) {
    return l.first != r.first ? l.first > r.first : l.second < r.second;
  });
  ranked.resize(std::min(ranked.size(), a.top));
  std::cout << "alternatives (trace similarity):\n";
  for (const auto& [sim, word] : ranked) std::cout << "  " << std::setw(20) << std::left << word << sim << '\n';
  return 0;
}

struct EvaluateArgs {
  std::string lexicon, hierarchy, dataset, grid, out, scatter;
  std::optional<double> highlight;
};

int cmd_evaluate(const EvaluateArgs& a) {
  const Lexicon lex = load_lexicon(a.lexicon);
  const HypernymHierarchy hierarchy = load_hierarchy(a.hierarchy);
  const PlausibilityDataset dataset = load_dataset(a.dataset);
  const GridPlan plan(load_grid_spec(a.grid), hierarchy, lex);
  const ResultTable table = run_grid(dataset, lex, plan.configs());
  {
    auto out = open_out(a.out);
    write_result_csv(out, table);
  }
  if (!a.scatter.empty()) {
    auto out = open_out(a.scatter);
    write_scatter_csv(out, table, dataset);
  }
  write_summary(std::cout, table, a.highlight);
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, const VerifyOptions& options) {
  std::cout << "kernels: " << to_string(kernels::active().isa) << '\n';
  const VerifyReport report = verify_theorems(seed, trials, options);
  write_report(std::cout, report);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix conversational negation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dmsem 0.1.0");

  BuildArgs build;
  auto* b = app.add_subcommand("build-lexicon", "Build density matrices from word vectors and a hypernym file");
  b->add_option("--vectors", build.vectors, "Word vectors, one `word v1 ... vd` per line")->required()->check(CLI::ExistingFile);
  b->add_option("--hierarchy", build.hierarchy, "Hypernym paths, `word<TAB>h1,h2,...`")->required()->check(CLI::ExistingFile);
  b->add_option("--out", build.out, "Output lexicon file")->required();
  b->add_option("--dataset", build.dataset, "Also build matrices for every word in this dataset")->check(CLI::ExistingFile);

  NegateArgs neg;
  auto* n = app.add_subcommand("negate", "Conversational negation of one word");
  n->add_option("--lexicon", neg.lexicon)->required()->check(CLI::ExistingFile);
  n->add_option("--hierarchy", neg.hierarchy)->required()->check(CLI::ExistingFile);
  n->add_option("--word", neg.word)->required();
  n->add_option("--negation", neg.negation)->check(CLI::IsMember({"sub", "inv"}))->capture_default_str();
  n->add_option("--composition", neg.composition)
      ->check(CLI::IsMember({"spider", "fuzz", "phaser", "mult", "diag"}))
      ->capture_default_str();
  n->add_option("--basis", neg.basis)->check(CLI::IsMember({"w", "c"}))->capture_default_str();
  n->add_option("--context-fn", neg.context_fn)->check(CLI::IsMember({"poly", "exp", "hyp"}))->capture_default_str();
  n->add_option("--x", neg.x, "Weight function parameter")->check(CLI::NonNegativeNumber)->capture_default_str();
  n->add_option("--support-weight", neg.support_weight, "Support weight for inv")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  n->add_option("--top", neg.top, "Alternatives to list")->capture_default_str();
  n->add_flag("--drop-missing-hypernyms", neg.drop_missing, "Skip hypernyms without a matrix");
  n->add_flag("--text-out", neg.text_out, "Print the result matrix as text instead of a summary");

  EvaluateArgs ev;
  auto* e = app.add_subcommand("evaluate", "Correlate a configuration grid with human plausibility ratings");
  e->add_option("--lexicon", ev.lexicon)->required()->check(CLI::ExistingFile);
  e->add_option("--hierarchy", ev.hierarchy)->required()->check(CLI::ExistingFile);
  e->add_option("--dataset", ev.dataset)->required()->check(CLI::ExistingFile);
  e->add_option("--grid", ev.grid, "Grid config (`key = value`)")->required()->check(CLI::ExistingFile);
  e->add_option("--out", ev.out, "Result CSV")->required();
  e->add_option("--scatter", ev.scatter, "Per-pair scores CSV");
  e->add_option("--highlight", ev.highlight, "Star correlations at or above this value in the console table");

  std::uint64_t seed = 0;
  std::size_t trials = 200;
  VerifyOptions vopt;
  auto* v = app.add_subcommand("verify", "Run the seeded property suites");
  v->add_option("--seed", seed)->capture_default_str();
  v->add_option("--trials", trials)->capture_default_str();
  v->add_option("--min-dim", vopt.min_dim)->capture_default_str();
  v->add_option("--max-dim", vopt.max_dim)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*b) return cmd_build(build);
    if (*n) return cmd_negate(neg);
    if (*e) return cmd_evaluate(ev);
    if (*v) return cmd_verify(seed, trials, vopt);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
