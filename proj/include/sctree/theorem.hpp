#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctree/tree_catalog.hpp"
#include "sctree/verification.hpp"

namespace sctree {

struct RuleCheck {
  Alternative leaf;
  bool strategy_proof = false;
  std::optional<ManipulationWitness> witness;
};

// Outcome of checking one (tree, domain, n) instance against the
// characterization: on a minimally rich domain, single_peaked and
// all_extreme_sp must agree; a verdict where they differ is a failure of
// the whole build, not of the instance.
struct TheoremVerdict {
  std::string tree_id;
  std::string domain_id;
  int n = 0;
  std::string direction;  // "forward" or "converse"
  bool single_peaked = false;
  bool all_extreme_sp = false;
  std::vector<RuleCheck> rule_checks;

  bool consistent() const { return single_peaked == all_extreme_sp; }
};

// Direction 2=>1: on a minimally rich single-peaked domain, every extreme
// rule must pass exhaustive strategy-proofness checking.
TheoremVerdict verify_forward(const Tree& tree, const Domain& domain, int n,
                              const SearchLimits& limits = {},
                              const std::string& tree_id = "tree",
                              const std::string& domain_id = "domain");

// Direction 1=>2 contrapositive: on a minimally rich domain containing a
// non-single-peaked preference, some extreme rule must be manipulable.
// Rules are tried in canonical leaf order and the first witness recorded.
TheoremVerdict verify_converse(const Tree& tree, const Domain& domain, int n,
                               const SearchLimits& limits = {},
                               const std::string& tree_id = "tree",
                               const std::string& domain_id = "domain");

// The constructive half of direction 1=>2: from a non-single-peaked
// preference in a minimally rich domain, pick the lexicographically first
// violating pair (a,b), the smallest leaf l with a on the l-to-b path, and
// top-b / top-a preferences from the domain; the resulting rule f^l moves
// the outcome from b to a when agent 1 misreports. The returned witness is
// re-validated by evaluation before being handed back.
std::pair<ExtremeRule, ManipulationWitness> construct_proof_witness(const Tree& tree,
                                                                    const Preference& bad_pref,
                                                                    const Domain& domain, int n);

struct SweepOptions {
  bool forward = true;
  bool converse = true;
  int converse_max_nodes = 5;      // converse skipped on larger trees
  int converse_full_max_nodes = 4; // every corruption up to here, sampled above
  int corruption_sample = 50;
  std::uint64_t seed = 1;
  SearchLimits limits;
  int jobs = 1;
};

// Characterization regression over a tree catalog: for each tree and each
// n, verify_forward on the single-peaked domain and verify_converse on
// one-preference corruptions of it. Verdicts come back sorted by
// (tree id, domain id, n) regardless of worker count.
std::vector<TheoremVerdict> sweep(const std::vector<CatalogTree>& trees,
                                  const std::vector<int>& n_values,
                                  const SweepOptions& options = {});

// Non-single-peaked permutations of the tree's nodes, lexicographic order.
std::vector<Preference> non_single_peaked_permutations(const Tree& tree);

}  // namespace sctree
