#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "sctree/preference.hpp"
#include "sctree/rules.hpp"

namespace sctree {

// Caps on exhaustive searches. One work unit = one rule evaluation, counted
// whether or not a memo answers it; a search that needs more than the
// budget aborts with WorkLimitExceeded instead of hanging.
struct SearchLimits {
  std::uint64_t work_budget = 100'000'000;
};

// Proof that a rule is manipulable: replacing entry `agent` (1-based) of
// the truthful profile by the misreport moves the outcome somewhere the
// agent's truthful preference ranks higher.
struct ManipulationWitness {
  int agent;
  Profile truthful_profile;
  Preference misreport;
  Alternative truthful_outcome;
  Alternative deviating_outcome;
};

// Profile where every agent prefers `dominating` to the rule's outcome.
struct EfficiencyWitness {
  Profile profile;
  Alternative dominating;
  Alternative outcome;
};

// Unanimous-top profile whose outcome is not the shared top.
struct UnanimityWitness {
  Profile profile;
  Alternative unanimous_top;
  Alternative outcome;
};

// Profile whose outcome changes under reordering of the entries.
struct AnonymityWitness {
  Profile profile;
  Profile permuted_profile;
  Alternative outcome;
  Alternative permuted_outcome;
};

using Witness = std::variant<std::monostate, ManipulationWitness, EfficiencyWitness,
                             UnanimityWitness, AnonymityWitness>;

struct CheckReport {
  std::string property;
  bool holds = false;
  Witness witness;
  std::uint64_t profiles_examined = 0;
  std::uint64_t work_units = 0;
};

// Re-evaluate a witness from its definition alone.
bool revalidate(const Rule& rule, const ManipulationWitness& w);
bool revalidate(const Rule& rule, const EfficiencyWitness& w);

// Lexicographically first manipulation under (profile index tuple, agent,
// misreport index) enumeration, or nothing when the rule is strategy-proof
// on domain^n. Profiles run as base-|domain| counters over preference
// indices, agents ascending, misreports ascending.
std::optional<ManipulationWitness> find_manipulation(const Rule& rule, const Domain& domain,
                                                     int n, const SearchLimits& limits = {});

bool is_strategy_proof(const Rule& rule, const Domain& domain, int n,
                       const SearchLimits& limits = {});

// find_manipulation wrapped as a report, for the CLI and sweeps.
CheckReport check_strategy_proofness(const Rule& rule, const Domain& domain, int n,
                                     const SearchLimits& limits = {});

// Checks every unanimous-top profile reachable in domain^n.
CheckReport check_unanimity(const Rule& rule, const Domain& domain, int n);

// Compares each profile against its sorted-entry canonical form instead of
// running all n! permutations; the equivalence is property-tested.
CheckReport check_anonymity(const Rule& rule, const Domain& domain, int n);

// Alternatives not unanimously beaten by any other alternative.
NodeSet pareto_set(const Profile& profile);

CheckReport check_efficiency(const Rule& rule, const Domain& domain, int n,
                             const SearchLimits& limits = {});

// Existence-only strategy-proofness search over (agent preference,
// other-agents' top multiset, misreport top). Valid only for rules that
// declare tops_only; returns true iff a manipulation exists.
bool manipulation_exists_tops_only(const Rule& rule, const Domain& domain, int n,
                                   const SearchLimits& limits = {});

}  // namespace sctree
