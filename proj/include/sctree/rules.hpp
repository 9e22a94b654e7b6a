#pragma once

#include <string>
#include <vector>

#include "sctree/preference.hpp"
#include "sctree/tree.hpp"

namespace sctree {

// A social choice function: a total evaluation map from profiles over a
// fixed alternative set to alternatives. The verifier treats rules as
// black boxes; a rule may declare itself tops-only to unlock the memoized
// search path, in which case apply_to_tops must agree with apply.
class Rule {
 public:
  virtual ~Rule() = default;

  virtual const std::vector<Alternative>& alternatives() const = 0;
  virtual Alternative apply(const Profile& profile) const = 0;

  virtual bool tops_only() const { return false; }
  virtual Alternative apply_to_tops(const NodeSet& tops) const;

  virtual std::string describe() const = 0;
};

// f^l: selects the hull node of the reported peaks nearest a fixed leaf.
class ExtremeRule final : public Rule {
 public:
  static ExtremeRule make(Tree tree, Alternative leaf);

  const Tree& tree() const { return tree_; }
  const Alternative& leaf() const { return leaf_; }

  const std::vector<Alternative>& alternatives() const override { return tree_.nodes(); }
  Alternative apply(const Profile& profile) const override;
  bool tops_only() const override { return true; }
  Alternative apply_to_tops(const NodeSet& tops) const override;
  std::string describe() const override { return "extreme(" + leaf_ + ")"; }

 private:
  ExtremeRule(Tree tree, Alternative leaf) : tree_(std::move(tree)), leaf_(std::move(leaf)) {}
  Tree tree_;
  Alternative leaf_;
};

// One rule per leaf, in canonical leaf order; always at least two.
std::vector<ExtremeRule> all_extreme_rules(const Tree& tree);

}  // namespace sctree
