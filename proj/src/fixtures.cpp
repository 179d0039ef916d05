#include "dmsem/fixtures.hpp"

#include <sstream>
#include <string>

namespace dmsem::fixtures {

Lexicon toy_lexicon() {
  Lexicon lex;
  lex.insert("apple", Dmat::diagonal({1, 0, 0, 0}));
  lex.insert("orange", Dmat::diagonal({0, 1, 0, 0}));
  lex.insert("fig", Dmat::diagonal({0, 0, 1, 0}));
  lex.insert("movie", Dmat::diagonal({0, 0, 0, 1}));
  lex.insert("fruit", Dmat::diagonal({1.0 / 2, 1.0 / 3, 1.0 / 6, 0}));
  return lex;
}

HypernymHierarchy toy_hierarchy() {
  HypernymHierarchy h;
  h.add("apple", {"fruit"});
  return h;
}

std::string_view desk_vectors_text() {
  return R"(apple 1 0.9 0 0 0 0.3 0 0
orange 1 0.35 0.9 0 0 0.3 0 0
lemon 0.9 0 0.8 0 0 0.3 0 0.15
lime 0.8 0 0.9 0 0 0.2 0 -0.1
fig 0.6 0 0 1 0 0.3 0 0.2
movie 0 0 0 0 1 0 0.3 0.1
fruit 1 0 0 0 0 0.4 0 0
food 0.3 0 0 0 0 1 0 0
film 0 0 0 0 1 0 0.5 0
entity 0 0 0 0 0.2 0.2 1 0
)";
}

std::string_view desk_hierarchy_text() {
  return R"(# word<TAB>nearest hypernym first
apple	fruit,food,entity
orange	fruit,food,entity
lemon	fruit,food,entity
lime	fruit,food,entity
fig	fruit,food,entity
movie	film,entity
fruit	food,entity
food	entity
film	entity
)";
}

std::string_view desk_dataset_text() {
  return "negated\talternative\tmean_rating\napple\torange\t4.6\napple\tfig\t3.5\napple\tmovie\t1.3\n";
}

Desk desk() {
  std::istringstream vectors{std::string(desk_vectors_text())};
  std::istringstream hierarchy{std::string(desk_hierarchy_text())};
  std::istringstream dataset{std::string(desk_dataset_text())};
  Desk d;
  d.hierarchy = parse_hierarchy(hierarchy);
  d.lexicon = build_lexicon(parse_vectors(vectors), d.hierarchy);
  d.dataset = parse_dataset(dataset);
  return d;
}

}  // namespace dmsem::fixtures
