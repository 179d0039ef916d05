#pragma once

// Small built-in fixtures. The desk fixture is the same data shipped under
// data/fixture/.

#include <string_view>

#include "dmsem/experiment.hpp"
#include "dmsem/hierarchy.hpp"
#include "dmsem/lexicon.hpp"

namespace dmsem::fixtures {

/// 4-dim toy: apple, orange, fig, movie are the basis vectors e0..e3 and
/// fruit = 1/2 apple + 1/3 orange + 1/6 fig.
Lexicon toy_lexicon();

/// apple -> fruit
HypernymHierarchy toy_hierarchy();

std::string_view desk_vectors_text();
std::string_view desk_hierarchy_text();
std::string_view desk_dataset_text();

struct Desk {
  HypernymHierarchy hierarchy;
  Lexicon lexicon;
  PlausibilityDataset dataset;
};

Desk desk();

}  // namespace dmsem::fixtures
