#pragma once

#include <string>
#include <vector>

#include "sctree/tree.hpp"

namespace sctree {

struct CatalogTree {
  std::string id;  // "t<size>_<ordinal>", ordinals by canonical edge list
  Tree tree;
};

// One representative per isomorphism class of trees with min_nodes to
// max_nodes nodes, labeled a, b, c, ... For each class the representative
// is the labeling with the lexicographically smallest edge list, found by
// decoding every Prufer sequence and deduplicating on a canonical form.
std::vector<CatalogTree> non_isomorphic_trees(int min_nodes, int max_nodes);

}  // namespace sctree
