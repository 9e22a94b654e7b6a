#include "sctree/rules.hpp"

#include <stdexcept>

namespace sctree {

Alternative Rule::apply_to_tops(const NodeSet&) const {
  throw std::logic_error("apply_to_tops called on a rule that is not tops-only");
}

ExtremeRule ExtremeRule::make(Tree tree, Alternative leaf) {
  int degree = tree.degree(leaf);  // throws UnknownNode
  if (degree != 1) {
    fail(ErrorKind::NotALeaf, "'" + leaf + "' has degree " + std::to_string(degree));
  }
  return ExtremeRule(std::move(tree), std::move(leaf));
}

Alternative ExtremeRule::apply(const Profile& profile) const {
  if (profile.alphabet() != tree_.nodes()) {
    fail(ErrorKind::AlphabetMismatch, "profile does not rank the tree's nodes");
  }
  return tree_.distance_minimizer(leaf_, profile.tops());
}

Alternative ExtremeRule::apply_to_tops(const NodeSet& tops) const {
  return tree_.distance_minimizer(leaf_, tops);
}

std::vector<ExtremeRule> all_extreme_rules(const Tree& tree) {
  std::vector<ExtremeRule> rules;
  for (const auto& leaf : tree.leaves()) {
    rules.push_back(ExtremeRule::make(tree, leaf));
  }
  return rules;
}

}  // namespace sctree
