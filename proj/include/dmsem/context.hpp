#pragma once

// Worldly context: an a-priori density matrix for a word, either a weighted
// mixture of its hypernyms or of its neighbours in a graded entailment
// graph. Context matrices are always rescaled to lambda_max = 1.

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dmsem/entailment.hpp"
#include "dmsem/hierarchy.hpp"
#include "dmsem/lexicon.hpp"

namespace dmsem {

enum class WeightKind { poly, exp, hyp };

/// Hypernym weight family; i runs 1..n from the nearest hypernym.
///   poly: (n - i)^x
///   exp:  (1 + x/10)^(n - i)
///   hyp:  (n - i)^(x/2) * k_E(word, h_i)
struct WeightFunction {
  WeightKind kind = WeightKind::poly;
  double x = 0.0;

  /// "poly:2", "exp:10", "hyp:0". Throws InvalidArgument.
  static WeightFunction parse(std::string_view spec);
  std::string label() const;
};

/// Raw weights for a path of length n. `entailment` supplies k_E(word, h_i)
/// and is only read for the hyp family.
std::vector<double> raw_hypernym_weights(const WeightFunction& fn, std::size_t n,
                                         std::span<const double> entailment = {});

/// Weights for `word`'s path, rescaled to sum 1 (left as zeros when they all
/// vanish). Throws UnknownWord when the hierarchy lacks `word`, MissingMatrix
/// when the hyp family needs a matrix the lexicon lacks.
std::vector<double> hypernym_weights(const WeightFunction& fn, const std::string& word,
                                     const HypernymHierarchy& hierarchy, const Lexicon& lexicon);

/// Convex mixture of `parts` with `weights` rescaled to sum 1, then
/// rescaled to lambda_max = 1. Throws ZeroMatrix when the weights vanish.
Dmat context_mixture(std::span<const Dmat> parts, std::span<const double> weights);

/// sum_i p_i [[h_i]] rescaled to lambda_max = 1. Throws UnknownWord,
/// MissingMatrix, ZeroMatrix.
Dmat worldly_context_hierarchy(const std::string& word, const HypernymHierarchy& hierarchy, const Lexicon& lexicon,
                               const WeightFunction& fn);

struct EntailmentEdge {
  std::string target;
  double forward;   // p: measure(source, target)
  double backward;  // q: measure(target, source)
};

class EntailmentGraph {
 public:
  void add(const std::string& source, EntailmentEdge edge);
  /// Empty when `word` has no outgoing edge.
  std::span<const EntailmentEdge> neighbors(const std::string& word) const;
  const std::map<std::string, std::vector<EntailmentEdge>>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept;

 private:
  std::map<std::string, std::vector<EntailmentEdge>> edges_;
};

/// Edge u -> v for every ordered pair u != v whose forward weight is at
/// least `threshold`. `measure` must be k_hyp (stored clamped to [0, 1] so
/// weights stay finite) or k_E.
EntailmentGraph build_entailment_graph(const Lexicon& lexicon, Measure measure, double threshold);

/// `u<TAB>v<TAB>p` per edge, 9 significant digits.
void write_entailment_graph(std::ostream& out, const EntailmentGraph& graph);

using WeightCombiner = std::function<double(double p, double q)>;
inline double forward_weight(double p, double /*q*/) { return p; }

/// sum_i f(p_i, q_i) [[h_i]] over graph neighbours, rescaled to
/// lambda_max = 1. Throws IsolatedWord, ZeroMatrix, InvalidArgument for a
/// negative combiner value.
Dmat worldly_context_graph(const std::string& word, const EntailmentGraph& graph, const Lexicon& lexicon,
                           const WeightCombiner& combine = forward_weight);

/// Source of worldly context for the conversational-negation pipeline.
class ContextProvider {
 public:
  virtual ~ContextProvider() = default;
  virtual Dmat context(const std::string& word) const = 0;
  virtual std::string label() const = 0;
};

class HierarchyContext final : public ContextProvider {
 public:
  /// With drop_missing set, hypernyms absent from the lexicon are removed
  /// from the path before weighting instead of raising MissingMatrix.
  HierarchyContext(const HypernymHierarchy& hierarchy, const Lexicon& lexicon, WeightFunction fn,
                   bool drop_missing = false);
  Dmat context(const std::string& word) const override;
  std::string label() const override { return fn_.label(); }

 private:
  const HypernymHierarchy& hierarchy_;
  const Lexicon& lexicon_;
  WeightFunction fn_;
  bool drop_missing_;
  HypernymHierarchy filtered_;
};

class GraphContext final : public ContextProvider {
 public:
  GraphContext(const EntailmentGraph& graph, const Lexicon& lexicon, WeightCombiner combine = forward_weight,
               std::string label = "graph");
  Dmat context(const std::string& word) const override;
  std::string label() const override { return label_; }

 private:
  const EntailmentGraph& graph_;
  const Lexicon& lexicon_;
  WeightCombiner combine_;
  std::string label_;
};

/// Precomputed contexts, e.g. hand-built fixtures.
class FixedContext final : public ContextProvider {
 public:
  explicit FixedContext(std::map<std::string, Dmat> contexts, std::string label = "fixed")
      : contexts_(std::move(contexts)), label_(std::move(label)) {}
  Dmat context(const std::string& word) const override;
  std::string label() const override { return label_; }

 private:
  std::map<std::string, Dmat> contexts_;
  std::string label_;
};

}  // namespace dmsem
