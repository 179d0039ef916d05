#include "dmsem/context.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dmsem/error.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace dmsem {

// --- weight functions ------------------------------------------------------------

WeightFunction WeightFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  WeightFunction fn;
  if (name == "poly") {
    fn.kind = WeightKind::poly;
  } else if (name == "exp") {
    fn.kind = WeightKind::exp;
  } else if (name == "hyp") {
    fn.kind = WeightKind::hyp;
  } else {
    throw Error(Errc::InvalidArgument, "unknown weight function '" + std::string(spec) + "'");
  }
  if (colon != std::string_view::npos) {
    const auto x = text::parse_double(text::trim(spec.substr(colon + 1)));
    if (!x || *x < 0.0) throw Error(Errc::InvalidArgument, "bad weight parameter in '" + std::string(spec) + "'");
    fn.x = *x;
  }
  return fn;
}

std::string WeightFunction::label() const {
  std::ostringstream s;
  s << (kind == WeightKind::poly ? "poly" : kind == WeightKind::exp ? "exp" : "hyp") << ':' << x;
  return s.str();
}

std::vector<double> raw_hypernym_weights(const WeightFunction& fn, std::size_t n, std::span<const double> entailment) {
  if (fn.kind == WeightKind::hyp && entailment.size() != n) {
    throw Error(Errc::DimensionMismatch, "hyp weights need one entailment value per hypernym");
  }
  std::vector<double> w(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double distance = static_cast<double>(n - i);
    switch (fn.kind) {
      case WeightKind::poly: w[i - 1] = std::pow(distance, fn.x); break;
      case WeightKind::exp: w[i - 1] = std::pow(1.0 + fn.x / 10.0, distance); break;
      case WeightKind::hyp: w[i - 1] = std::pow(distance, fn.x / 2.0) * entailment[i - 1]; break;
    }
  }
  return w;
}

namespace {

const Dmat& require_matrix(const Lexicon& lexicon, const std::string& word) {
  if (const Dmat* m = lexicon.find(word)) return *m;
  throw Error(Errc::MissingMatrix, "no density matrix for '" + word + "'");
}

std::vector<double> weights_for_path(const WeightFunction& fn, const std::string& word,
                                     const std::vector<std::string>& path, const Lexicon& lexicon) {
  std::vector<double> entailment;
  if (fn.kind == WeightKind::hyp) {
    const Dmat& w = require_matrix(lexicon, word);
    for (const auto& h : path) entailment.push_back(k_e(w, require_matrix(lexicon, h)));
  }
  auto weights = raw_hypernym_weights(fn, path.size(), entailment);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total > 0.0) {
    for (double& p : weights) p /= total;
  }
  return weights;
}

Dmat mixture(std::span<const Dmat* const> parts, std::span<const double> weights) {
  Matrix sum(parts.front()->dim());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (weights[i] == 0.0) continue;
    require_same_dim(sum, parts[i]->matrix());
    sum += weights[i] * parts[i]->matrix();
  }
  return scale_to_unit_max_eig(Dmat::make(sum));
}

}  // namespace

Dmat context_mixture(std::span<const Dmat> parts, std::span<const double> weights) {
  if (parts.empty() || parts.size() != weights.size()) {
    throw Error(Errc::DimensionMismatch, "need one weight per matrix");
  }
  std::vector<double> w(weights.begin(), weights.end());
  for (double v : w) {
    if (!(v >= 0.0)) throw Error(Errc::InvalidArgument, "negative mixture weight");
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (total <= 0.0) throw Error(Errc::ZeroMatrix, "all mixture weights vanish");
  for (double& v : w) v /= total;
  std::vector<const Dmat*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return mixture(ptrs, w);
}

std::vector<double> hypernym_weights(const WeightFunction& fn, const std::string& word,
                                     const HypernymHierarchy& hierarchy, const Lexicon& lexicon) {
  return weights_for_path(fn, word, hierarchy.hypernyms(word), lexicon);
}

Dmat worldly_context_hierarchy(const std::string& word, const HypernymHierarchy& hierarchy, const Lexicon& lexicon,
                               const WeightFunction& fn) {
  const auto& path = hierarchy.hypernyms(word);
  const auto weights = weights_for_path(fn, word, path, lexicon);
  std::vector<const Dmat*> parts;
  for (const auto& h : path) parts.push_back(&require_matrix(lexicon, h));
  return mixture(parts, weights);
}

// --- entailment graph ---------------------------------------------------------------

void EntailmentGraph::add(const std::string& source, EntailmentEdge edge) {
  if (source == edge.target) throw Error(Errc::InvalidArgument, "self-loop on '" + source + "'");
  if (!std::isfinite(edge.forward) || !std::isfinite(edge.backward)) {
    throw Error(Errc::InvalidArgument, "non-finite edge weight");
  }
  edges_[source].push_back(std::move(edge));
}

std::span<const EntailmentEdge> EntailmentGraph::neighbors(const std::string& word) const {
  const auto it = edges_.find(word);
  if (it == edges_.end()) return {};
  return it->second;
}

std::size_t EntailmentGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [source, out] : edges_) n += out.size();
  return n;
}

EntailmentGraph build_entailment_graph(const Lexicon& lexicon, Measure measure, double threshold) {
  if (measure != Measure::k_hyp && measure != Measure::k_hyp_clamped && measure != Measure::k_e) {
    throw Error(Errc::InvalidArgument, "entailment graph needs k_hyp or k_E");
  }
  const auto graded = [measure](const Dmat& a, const Dmat& b) {
    return measure == Measure::k_e ? k_e(a, b) : k_hyp_clamped(a, b);
  };

  std::vector<std::pair<const std::string*, const Dmat*>> nodes;
  for (const auto& [word, m] : lexicon.entries()) nodes.emplace_back(&word, &m);
  const std::size_t n = nodes.size();

  // weight[i * n + j] = measure(node i, node j)
  std::vector<double> weight(n * n, 0.0);
  detail::parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) weight[i * n + j] = graded(*nodes[i].second, *nodes[j].second);
    }
  });

  EntailmentGraph graph;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || weight[i * n + j] < threshold) continue;
      graph.add(*nodes[i].first, {*nodes[j].first, weight[i * n + j], weight[j * n + i]});
    }
  }
  return graph;
}

void write_entailment_graph(std::ostream& out, const EntailmentGraph& graph) {
  std::ostringstream s;
  s << std::setprecision(9);
  for (const auto& [source, edges] : graph.edges()) {
    for (const auto& e : edges) s << source << '\t' << e.target << '\t' << e.forward << '\n';
  }
  out << s.str();
}

Dmat worldly_context_graph(const std::string& word, const EntailmentGraph& graph, const Lexicon& lexicon,
                           const WeightCombiner& combine) {
  const auto edges = graph.neighbors(word);
  if (edges.empty()) throw Error(Errc::IsolatedWord, "'" + word + "' has no neighbours");
  std::vector<const Dmat*> parts;
  std::vector<double> weights;
  for (const auto& e : edges) {
    const double f = combine(e.forward, e.backward);
    if (!(f >= 0.0) || !std::isfinite(f)) throw Error(Errc::InvalidArgument, "combiner returned a negative weight");
    parts.push_back(&require_matrix(lexicon, e.target));
    weights.push_back(f);
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total <= 0.0) throw Error(Errc::ZeroMatrix, "all neighbour weights vanish for '" + word + "'");
  for (double& w : weights) w /= total;
  return mixture(parts, weights);
}

// --- providers --------------------------------------------------------------------

HierarchyContext::HierarchyContext(const HypernymHierarchy& hierarchy, const Lexicon& lexicon, WeightFunction fn,
                                   bool drop_missing)
    : hierarchy_(hierarchy), lexicon_(lexicon), fn_(fn), drop_missing_(drop_missing) {
  if (!drop_missing_) return;
  for (const auto& [word, path] : hierarchy_.paths()) {
    std::vector<std::string> kept;
    for (const auto& h : path) {
      if (lexicon_.contains(h)) kept.push_back(h);
    }
    if (!kept.empty()) filtered_.add(word, std::move(kept));
  }
}

Dmat HierarchyContext::context(const std::string& word) const {
  const auto& h = drop_missing_ ? filtered_ : hierarchy_;
  if (!h.covers(word)) throw Error(Errc::IsolatedWord, "no hypernym path for '" + word + "'");
  return worldly_context_hierarchy(word, h, lexicon_, fn_);
}

GraphContext::GraphContext(const EntailmentGraph& graph, const Lexicon& lexicon, WeightCombiner combine,
                           std::string label)
    : graph_(graph), lexicon_(lexicon), combine_(std::move(combine)), label_(std::move(label)) {}

Dmat GraphContext::context(const std::string& word) const {
  return worldly_context_graph(word, graph_, lexicon_, combine_);
}

Dmat FixedContext::context(const std::string& word) const {
  const auto it = contexts_.find(word);
  if (it == contexts_.end()) throw Error(Errc::IsolatedWord, "no context for '" + word + "'");
  return it->second;
}

}  // namespace dmsem
