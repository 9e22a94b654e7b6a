#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sctree/tree_catalog.hpp"
#include "sctree/verification.hpp"

using namespace sctree;

namespace {

Domain unrestricted_domain(const Tree& tree) {
  return Domain::make(tree.nodes(), oracle::all_permutations(tree.nodes()));
}

// P(G) plus one appended non-single-peaked preference.
Domain corrupted_domain(const Tree& tree, const Preference& bad) {
  Domain sp = enumerate_single_peaked(tree);
  std::vector<Preference> prefs = sp.preferences();
  prefs.push_back(bad);
  return Domain::make(tree.nodes(), std::move(prefs));
}

struct ConstantRule final : Rule {
  std::vector<Alternative> alphabet;
  Alternative value;
  ConstantRule(std::vector<Alternative> alphabet_, Alternative value_)
      : alphabet(std::move(alphabet_)), value(std::move(value_)) {}
  const std::vector<Alternative>& alternatives() const override { return alphabet; }
  Alternative apply(const Profile&) const override { return value; }
  std::string describe() const override { return "constant(" + value + ")"; }
};

struct DictatorRule final : Rule {
  std::vector<Alternative> alphabet;
  explicit DictatorRule(std::vector<Alternative> alphabet_) : alphabet(std::move(alphabet_)) {}
  const std::vector<Alternative>& alternatives() const override { return alphabet; }
  Alternative apply(const Profile& profile) const override { return profile.entry(0).top(); }
  std::string describe() const override { return "dictator(1)"; }
};

bool same_witness(const ManipulationWitness& lhs, const ManipulationWitness& rhs) {
  return lhs.agent == rhs.agent && lhs.truthful_profile == rhs.truthful_profile &&
         lhs.misreport == rhs.misreport && lhs.truthful_outcome == rhs.truthful_outcome &&
         lhs.deviating_outcome == rhs.deviating_outcome;
}

}  // namespace

TEST_CASE("extreme rules are strategy-proof on their single-peaked domain") {
  Tree line4 = line_tree(4);
  Domain sp4 = enumerate_single_peaked(line4);
  CHECK_FALSE(find_manipulation(ExtremeRule::make(line4, "a"), sp4, 2).has_value());

  Tree star = star_fixture();
  Domain sp_star = enumerate_single_peaked(star);
  CHECK(is_strategy_proof(ExtremeRule::make(star, "z"), sp_star, 2));
}

TEST_CASE("one corruption makes the line rule manipulable, with the frozen first witness") {
  Tree line4 = line_tree(4);
  Preference bad = Preference::make({"d", "b", "c", "a"}, line4.nodes());
  Domain domain = corrupted_domain(line4, bad);
  ExtremeRule rule = ExtremeRule::make(line4, "a");

  auto witness = find_manipulation(rule, domain, 2);
  REQUIRE(witness.has_value());
  CHECK(revalidate(rule, *witness));

  // independent full enumeration through Rule::apply only
  auto expected = oracle::naive_find_manipulation(rule, domain, 2);
  REQUIRE(expected.has_value());
  CHECK(same_witness(*witness, *expected));

  // frozen: first profile (by index tuple) pairs a top-c agent with the
  // corrupted preference; the corrupted agent pulls the outcome from c to b
  CHECK(witness->agent == 2);
  CHECK(witness->truthful_profile.entry(0).ranking() ==
        std::vector<Alternative>{"c", "b", "a", "d"});
  CHECK(witness->truthful_profile.entry(1).ranking() ==
        std::vector<Alternative>{"d", "b", "c", "a"});
  CHECK(witness->misreport.ranking() == std::vector<Alternative>{"b", "a", "c", "d"});
  CHECK(witness->truthful_outcome == "c");
  CHECK(witness->deviating_outcome == "b");
  CHECK(witness->truthful_profile.entry(1).prefers(witness->deviating_outcome,
                                                   witness->truthful_outcome));
}

TEST_CASE("the unrestricted domain is not strategy-proof for extreme rules on the line") {
  Tree line4 = line_tree(4);
  Domain all = unrestricted_domain(line4);
  ExtremeRule rule = ExtremeRule::make(line4, "a");
  auto witness = find_manipulation(rule, all, 2);
  REQUIRE(witness.has_value());
  CHECK(revalidate(rule, *witness));
}

TEST_CASE("degenerate searches") {
  Tree line4 = line_tree(4);
  std::vector<Alternative> nodes = line4.nodes();
  Domain singleton = Domain::make(nodes, {Preference::make({"b", "a", "c", "d"}, nodes)});
  ExtremeRule rule = ExtremeRule::make(line4, "a");
  CHECK_FALSE(find_manipulation(rule, singleton, 2).has_value());

  // n = 1: outcome is the agent's own top, nothing beats it
  Domain all = unrestricted_domain(line4);
  CHECK(is_strategy_proof(rule, all, 1));

  CHECK_THROWS_AS(find_manipulation(rule, all, 0), Error);
}

TEST_CASE("work budget aborts loudly") {
  Tree line4 = line_tree(4);
  Domain all = unrestricted_domain(line4);
  ExtremeRule rule = ExtremeRule::make(line4, "d");
  try {
    find_manipulation(rule, all, 3, SearchLimits{10});
    FAIL("expected WorkLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WorkLimitExceeded);
  }
}

TEST_CASE("check_strategy_proofness reports counts") {
  Tree line4 = line_tree(4);
  Domain sp4 = enumerate_single_peaked(line4);
  CheckReport report = check_strategy_proofness(ExtremeRule::make(line4, "a"), sp4, 2);
  CHECK(report.holds);
  CHECK(report.property == "strategy-proofness");
  CHECK(report.profiles_examined == 64);          // 8^2
  CHECK(report.work_units == 64 * (1 + 2 * 8));   // outcome + all deviations
}

TEST_CASE("check_unanimity") {
  Tree line4 = line_tree(4);
  Domain sp4 = enumerate_single_peaked(line4);
  for (const auto& rule : all_extreme_rules(line4)) {
    CHECK(check_unanimity(rule, sp4, 2).holds);
  }

  ConstantRule constant(line4.nodes(), "a");
  CheckReport report = check_unanimity(constant, sp4, 2);
  CHECK_FALSE(report.holds);
  const auto* w = std::get_if<UnanimityWitness>(&report.witness);
  REQUIRE(w != nullptr);
  CHECK(w->outcome == "a");
  CHECK(w->unanimous_top != "a");
  CHECK(w->profile.tops() == NodeSet::of({w->unanimous_top}));

  // a domain with a single preference holds trivially for unanimous rules
  Domain singleton = Domain::make(line4.nodes(),
                                  {Preference::make({"b", "a", "c", "d"}, line4.nodes())});
  CHECK(check_unanimity(ExtremeRule::make(line4, "a"), singleton, 3).holds);
}

TEST_CASE("check_anonymity") {
  Tree line4 = line_tree(4);
  Domain sp4 = enumerate_single_peaked(line4);
  for (const auto& rule : all_extreme_rules(line4)) {
    CHECK(check_anonymity(rule, sp4, 2).holds);
  }

  DictatorRule dictator(line4.nodes());
  CheckReport report = check_anonymity(dictator, sp4, 2);
  CHECK_FALSE(report.holds);
  const auto* w = std::get_if<AnonymityWitness>(&report.witness);
  REQUIRE(w != nullptr);
  CHECK(w->outcome != w->permuted_outcome);
  CHECK(dictator.apply(w->profile) == w->outcome);
  CHECK(dictator.apply(w->permuted_profile) == w->permuted_outcome);

  // vacuous for one agent
  CHECK(check_anonymity(dictator, sp4, 1).holds);
}

TEST_CASE("sorted-representative anonymity equals the all-permutations check") {
  Tree star = star_fixture();
  Domain sp_star = enumerate_single_peaked(star);
  for (int n : {1, 2, 3}) {
    for (const auto& rule : all_extreme_rules(star)) {
      CHECK(check_anonymity(rule, sp_star, n).holds ==
            oracle::anonymous_under_all_permutations(rule, sp_star, n));
    }
    DictatorRule dictator(star.nodes());
    CHECK(check_anonymity(dictator, sp_star, n).holds ==
          oracle::anonymous_under_all_permutations(dictator, sp_star, n));
  }
}

TEST_CASE("pareto_set") {
  Tree star = star_fixture();
  const auto& nodes = star.nodes();

  Profile two_leaves = Profile::make({Preference::make({"x", "c", "y", "z"}, nodes),
                                      Preference::make({"y", "c", "x", "z"}, nodes)});
  CHECK(pareto_set(two_leaves) == NodeSet::of({"c", "x", "y"}));
  CHECK(pareto_set(two_leaves) == star.path_hull(two_leaves.tops()));

  // unanimous profiles keep the shared top
  Profile unanimous = Profile::make({Preference::make({"c", "x", "y", "z"}, nodes),
                                     Preference::make({"c", "y", "x", "z"}, nodes)});
  CHECK(pareto_set(unanimous).contains("c"));

  // single agent: everything below the top is dominated by the top
  Profile alone = Profile::make({Preference::make({"y", "c", "x", "z"}, nodes)});
  CHECK(pareto_set(alone) == NodeSet::of({"y"}));
}

TEST_CASE("check_efficiency holds on lines, fails on the star under the unrestricted domain") {
  Tree line4 = line_tree(4);
  Domain line_all = unrestricted_domain(line4);
  for (const auto& rule : all_extreme_rules(line4)) {
    CHECK(check_efficiency(rule, line_all, 2).holds);
  }

  Tree star = star_fixture();
  Domain star_all = unrestricted_domain(star);
  CheckReport report = check_efficiency(ExtremeRule::make(star, "z"), star_all, 2);
  CHECK_FALSE(report.holds);
  const auto* w = std::get_if<EfficiencyWitness>(&report.witness);
  REQUIRE(w != nullptr);
  CHECK(revalidate(ExtremeRule::make(star, "z"), *w));
  CHECK_FALSE(pareto_set(w->profile).contains(w->outcome));

  // the documented failure shape: two leaf-topped agents who both rank the
  // center last get the center
  Profile doc = Profile::make({Preference::make({"x", "y", "z", "c"}, star.nodes()),
                               Preference::make({"y", "x", "z", "c"}, star.nodes())});
  ExtremeRule at_z = ExtremeRule::make(star, "z");
  CHECK(at_z.apply(doc) == "c");
  CHECK_FALSE(pareto_set(doc).contains("c"));
  CHECK(doc.entry(0).prefers("x", "c"));
  CHECK(doc.entry(1).prefers("x", "c"));

  // back on its own single-peaked domain the star rule is efficient
  Domain sp_star = enumerate_single_peaked(star);
  CHECK(check_efficiency(ExtremeRule::make(star, "z"), sp_star, 2).holds);
}

TEST_CASE("efficiency implies unanimity on every checked instance") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 4)) {
    for (const Domain& domain : {enumerate_single_peaked(tree), unrestricted_domain(tree)}) {
      for (const auto& rule : all_extreme_rules(tree)) {
        if (check_efficiency(rule, domain, 2).holds) {
          CHECK(check_unanimity(rule, domain, 2).holds);
        }
      }
    }
  }
}

TEST_CASE("pareto set equals the hull of tops on single-peaked domains") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 4)) {
    Domain domain = enumerate_single_peaked(tree);
    for (int n : {1, 2, 3}) {
      std::vector<int> tuple(n, 0);
      do {
        Profile profile = oracle::profile_of(domain, tuple);
        CHECK(pareto_set(profile) == tree.path_hull(profile.tops()));
      } while (oracle::advance_tuple(tuple, static_cast<int>(domain.size())));
    }
  }
}

TEST_CASE("memoized search returns exactly the naive first witness") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 4)) {
    auto bad_prefs = [&] {
      std::vector<Preference> out;
      for (const auto& p : oracle::all_permutations(tree.nodes())) {
        if (!oracle::pair_scan_single_peaked(p, tree)) out.push_back(p);
      }
      return out;
    }();
    REQUIRE(!bad_prefs.empty());
    Domain domain = corrupted_domain(tree, bad_prefs.front());
    for (const auto& rule : all_extreme_rules(tree)) {
      auto fast = find_manipulation(rule, domain, 2);
      auto naive = oracle::naive_find_manipulation(rule, domain, 2);
      REQUIRE(fast.has_value() == naive.has_value());
      if (fast) {
        CHECK(same_witness(*fast, *naive));
        CHECK(revalidate(rule, *fast));
      }
    }
  }
}

TEST_CASE("tops-only accelerated existence search agrees with the naive one") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 4)) {
    std::vector<Domain> domains{enumerate_single_peaked(tree)};
    for (const auto& p : oracle::all_permutations(tree.nodes())) {
      if (!oracle::pair_scan_single_peaked(p, tree)) {
        domains.push_back(corrupted_domain(tree, p));
        break;
      }
    }
    if (tree.size() == 3) domains.push_back(unrestricted_domain(tree));
    for (const auto& domain : domains) {
      for (int n : {1, 2, 3}) {
        for (const auto& rule : all_extreme_rules(tree)) {
          bool naive = oracle::naive_find_manipulation(rule, domain, n).has_value();
          CHECK(manipulation_exists_tops_only(rule, domain, n) == naive);
        }
      }
    }
  }
  // one 5-node instance on each side of the theorem
  Tree line5 = line_tree(5);
  Domain sp5 = enumerate_single_peaked(line5);
  Preference bad = Preference::make({"e", "b", "c", "d", "a"}, line5.nodes());
  REQUIRE_FALSE(is_single_peaked(bad, line5));
  for (const Domain& domain : {sp5, corrupted_domain(line5, bad)}) {
    for (const auto& rule : all_extreme_rules(line5)) {
      bool naive = oracle::naive_find_manipulation(rule, domain, 2).has_value();
      CHECK(manipulation_exists_tops_only(rule, domain, 2) == naive);
    }
  }
}

TEST_CASE("proof-case inequality: truthful outcome never loses to a deviation") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 4)) {
    Domain domain = enumerate_single_peaked(tree);
    const int k = static_cast<int>(domain.size());
    for (const auto& rule : all_extreme_rules(tree)) {
      std::vector<int> tuple(2, 0);
      do {
        Profile truthful = oracle::profile_of(domain, tuple);
        Alternative x = rule.apply(truthful);
        for (int agent = 0; agent < 2; ++agent) {
          for (int j = 0; j < k; ++j) {
            Alternative y = rule.apply(truthful.with_entry(agent, domain.at(j)));
            CHECK((x == y || truthful.entry(agent).prefers(x, y)));
          }
        }
      } while (oracle::advance_tuple(tuple, k));
    }
  }
}
