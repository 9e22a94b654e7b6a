#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "sctree/io.hpp"
#include "sctree/theorem.hpp"
#include "sctree/tree_catalog.hpp"
#include "sctree/verification.hpp"

namespace {

using namespace sctree;

std::vector<std::string> split_tokens(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

void emit(const Json& doc) { std::cout << render(doc); }

struct RuleChoice {
  std::string leaf;
  std::string rule_file;

  ExtremeRule resolve(const Tree& tree) const {
    if (!rule_file.empty()) return rule_from_json(load_json_file(rule_file), tree);
    if (leaf.empty()) fail(ErrorKind::ParseError, "a rule needs --leaf or --rule");
    return ExtremeRule::make(tree, leaf);
  }
};

void describe_witness(std::ostream& os, const ManipulationWitness& w) {
  os << "agent " << w.agent << " at profile (";
  for (int i = 0; i < w.truthful_profile.size(); ++i) {
    if (i > 0) os << "; ";
    os << w.truthful_profile.entry(i).to_string();
  }
  os << ") gains by reporting " << w.misreport.to_string() << ": outcome moves "
     << w.truthful_outcome << " -> " << w.deviating_outcome << "\n";
}

void print_report_text(const CheckReport& report) {
  std::cout << report.property << ": " << (report.holds ? "holds" : "fails") << " ("
            << report.profiles_examined << " profiles, " << report.work_units
            << " evaluations)\n";
  if (const auto* w = std::get_if<ManipulationWitness>(&report.witness)) {
    describe_witness(std::cout, *w);
  } else if (const auto* w = std::get_if<EfficiencyWitness>(&report.witness)) {
    std::cout << "outcome " << w->outcome << " is Pareto dominated by " << w->dominating << "\n";
  } else if (const auto* w = std::get_if<UnanimityWitness>(&report.witness)) {
    std::cout << "unanimous top " << w->unanimous_top << " but outcome " << w->outcome << "\n";
  } else if (const auto* w = std::get_if<AnonymityWitness>(&report.witness)) {
    std::cout << "outcome changes from " << w->outcome << " to " << w->permuted_outcome
              << " under reordering\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social choice on trees: extreme rules, single-peaked domains, verification"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  int exit_code = 0;

  // let --format appear on either side of the subcommand
  auto add_subcommand = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  // eval: apply a rule to a profile
  auto* eval_cmd = add_subcommand("eval", "apply a rule to a profile");
  struct {
    std::string tree, profile, domain;
    RuleChoice rule;
  } eval_opts;
  eval_cmd->add_option("--tree", eval_opts.tree, "tree file")->required();
  eval_cmd->add_option("--leaf", eval_opts.rule.leaf, "leaf of the extreme rule");
  eval_cmd->add_option("--rule", eval_opts.rule.rule_file, "rule designation file");
  eval_cmd->add_option("--profile", eval_opts.profile, "profile file")->required();
  eval_cmd->add_option("--domain", eval_opts.domain, "domain file (for index profiles)");
  eval_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(eval_opts.tree));
    std::optional<Domain> domain;
    if (!eval_opts.domain.empty()) domain = domain_from_json(load_json_file(eval_opts.domain));
    Profile profile = profile_from_json(load_json_file(eval_opts.profile), domain);
    Alternative outcome = eval_opts.rule.resolve(tree).apply(profile);
    if (format == "structured") {
      emit(Json{{"outcome", outcome}});
    } else {
      std::cout << outcome << "\n";
    }
  });

  // hull
  auto* hull_cmd = add_subcommand("hull", "path hull of a node set");
  struct {
    std::string tree, set;
  } hull_opts;
  hull_cmd->add_option("--tree", hull_opts.tree, "tree file")->required();
  hull_cmd->add_option("--set", hull_opts.set, "comma-separated nodes")->required();
  hull_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(hull_opts.tree));
    NodeSet hull = tree.path_hull(NodeSet(split_tokens(hull_opts.set)));
    if (format == "structured") {
      emit(Json{{"hull", hull.members()}});
    } else {
      for (std::size_t i = 0; i < hull.size(); ++i) {
        std::cout << (i ? " " : "") << hull.members()[i];
      }
      std::cout << "\n";
    }
  });

  // minimizer
  auto* min_cmd = add_subcommand("minimizer", "distance minimizer of x over a hull");
  struct {
    std::string tree, x, set;
  } min_opts;
  min_cmd->add_option("--tree", min_opts.tree, "tree file")->required();
  min_cmd->add_option("--x", min_opts.x, "source node")->required();
  min_cmd->add_option("--set", min_opts.set, "comma-separated nodes")->required();
  min_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(min_opts.tree));
    Alternative gate = tree.distance_minimizer(min_opts.x, NodeSet(split_tokens(min_opts.set)));
    if (format == "structured") {
      emit(Json{{"minimizer", gate}});
    } else {
      std::cout << gate << "\n";
    }
  });

  // enumerate-sp
  auto* enum_cmd = add_subcommand("enumerate-sp", "write the single-peaked domain of a tree");
  struct {
    std::string tree, out;
  } enum_opts;
  enum_cmd->add_option("--tree", enum_opts.tree, "tree file")->required();
  enum_cmd->add_option("--out", enum_opts.out, "write the domain file here instead of stdout");
  enum_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(enum_opts.tree));
    Json doc = domain_to_json(enumerate_single_peaked(tree));
    if (enum_opts.out.empty()) {
      emit(doc);
    } else {
      save_json_file(enum_opts.out, doc);
    }
  });

  // check-sp-domain
  auto* spdom_cmd = add_subcommand("check-sp-domain", "is every preference single-peaked?");
  struct {
    std::string tree, domain;
  } spdom_opts;
  spdom_cmd->add_option("--tree", spdom_opts.tree, "tree file")->required();
  spdom_cmd->add_option("--domain", spdom_opts.domain, "domain file")->required();
  spdom_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(spdom_opts.tree));
    Domain domain = domain_from_json(load_json_file(spdom_opts.domain));
    Json violations = Json::array();
    for (const auto& p : domain.preferences()) {
      if (auto pair = single_peaked_violation(p, tree)) {
        violations.push_back(Json{{"preference", p.ranking()},
                                  {"pair", Json::array({pair->first, pair->second})}});
      }
    }
    bool all_sp = violations.empty();
    if (format == "structured") {
      emit(Json{{"single_peaked", all_sp}, {"violations", violations}});
    } else if (all_sp) {
      std::cout << "single-peaked: yes\n";
    } else {
      std::cout << "single-peaked: no (" << violations.size() << " violating preferences)\n";
      for (const auto& v : violations) {
        std::cout << "  " << v["preference"].dump() << " violates at pair " << v["pair"].dump()
                  << "\n";
      }
    }
    if (!all_sp) exit_code = 1;
  });

  // check-rule
  auto* check_cmd = add_subcommand("check-rule", "check a property of a rule over a domain");
  struct {
    std::string tree, domain, property;
    RuleChoice rule;
    int n = 2;
    std::uint64_t budget = SearchLimits{}.work_budget;
  } check_opts;
  check_cmd->add_option("--tree", check_opts.tree, "tree file")->required();
  check_cmd->add_option("--leaf", check_opts.rule.leaf, "leaf of the extreme rule");
  check_cmd->add_option("--rule", check_opts.rule.rule_file, "rule designation file");
  check_cmd->add_option("--domain", check_opts.domain, "domain file")->required();
  check_cmd->add_option("--property", check_opts.property, "property to check")
      ->check(CLI::IsMember({"sp", "unanimity", "anonymity", "efficiency"}))
      ->required();
  check_cmd->add_option("--n", check_opts.n, "number of agents")->check(CLI::PositiveNumber);
  check_cmd->add_option("--budget", check_opts.budget, "work budget in rule evaluations")
      ->check(CLI::PositiveNumber);
  check_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(check_opts.tree));
    Domain domain = domain_from_json(load_json_file(check_opts.domain));
    ExtremeRule rule = check_opts.rule.resolve(tree);
    SearchLimits limits{check_opts.budget};
    CheckReport report;
    if (check_opts.property == "sp") {
      report = check_strategy_proofness(rule, domain, check_opts.n, limits);
    } else if (check_opts.property == "unanimity") {
      report = check_unanimity(rule, domain, check_opts.n);
    } else if (check_opts.property == "anonymity") {
      report = check_anonymity(rule, domain, check_opts.n);
    } else {
      report = check_efficiency(rule, domain, check_opts.n, limits);
    }
    if (format == "structured") {
      emit(report_to_json(report));
    } else {
      print_report_text(report);
    }
    if (!report.holds) exit_code = 1;
  });

  // find-manipulation
  auto* find_cmd = add_subcommand("find-manipulation", "search for a manipulation witness");
  struct {
    std::string tree, domain;
    RuleChoice rule;
    int n = 2;
    std::uint64_t budget = SearchLimits{}.work_budget;
  } find_opts;
  find_cmd->add_option("--tree", find_opts.tree, "tree file")->required();
  find_cmd->add_option("--leaf", find_opts.rule.leaf, "leaf of the extreme rule");
  find_cmd->add_option("--rule", find_opts.rule.rule_file, "rule designation file");
  find_cmd->add_option("--domain", find_opts.domain, "domain file")->required();
  find_cmd->add_option("--n", find_opts.n, "number of agents")->check(CLI::PositiveNumber);
  find_cmd->add_option("--budget", find_opts.budget, "work budget in rule evaluations")
      ->check(CLI::PositiveNumber);
  find_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(find_opts.tree));
    Domain domain = domain_from_json(load_json_file(find_opts.domain));
    ExtremeRule rule = find_opts.rule.resolve(tree);
    CheckReport report = check_strategy_proofness(rule, domain, find_opts.n,
                                                  SearchLimits{find_opts.budget});
    if (format == "structured") {
      emit(report_to_json(report));
    } else if (report.holds) {
      std::cout << "no manipulation found\n";
    } else {
      describe_witness(std::cout, std::get<ManipulationWitness>(report.witness));
    }
    if (!report.holds) exit_code = 1;
  });

  // proof-witness
  auto* proof_cmd = add_subcommand("proof-witness",
                                       "build the constructive manipulation witness for a "
                                       "non-single-peaked preference");
  struct {
    std::string tree, domain, bad;
    int n = 2;
  } proof_opts;
  proof_cmd->add_option("--tree", proof_opts.tree, "tree file")->required();
  proof_cmd->add_option("--domain", proof_opts.domain, "domain file")->required();
  proof_cmd->add_option("--bad", proof_opts.bad, "comma-separated ranking of the offending preference")
      ->required();
  proof_cmd->add_option("--n", proof_opts.n, "number of agents")->check(CLI::PositiveNumber);
  proof_cmd->callback([&] {
    Tree tree = tree_from_json(load_json_file(proof_opts.tree));
    Domain domain = domain_from_json(load_json_file(proof_opts.domain));
    Preference bad = Preference::make(split_tokens(proof_opts.bad), domain.alternatives());
    auto [rule, witness] = construct_proof_witness(tree, bad, domain, proof_opts.n);
    if (format == "structured") {
      emit(Json{{"rule", rule_to_json(rule)}, {"witness", witness_to_json(witness)}});
    } else {
      std::cout << "rule: extreme rule at leaf " << rule.leaf() << "\n";
      describe_witness(std::cout, witness);
    }
  });

  // pareto
  auto* pareto_cmd = add_subcommand("pareto", "Pareto set of a profile");
  struct {
    std::string profile, domain;
  } pareto_opts;
  pareto_cmd->add_option("--profile", pareto_opts.profile, "profile file")->required();
  pareto_cmd->add_option("--domain", pareto_opts.domain, "domain file (for index profiles)");
  pareto_cmd->callback([&] {
    std::optional<Domain> domain;
    if (!pareto_opts.domain.empty()) domain = domain_from_json(load_json_file(pareto_opts.domain));
    Profile profile = profile_from_json(load_json_file(pareto_opts.profile), domain);
    NodeSet pareto = pareto_set(profile);
    if (format == "structured") {
      emit(Json{{"pareto", pareto.members()}});
    } else {
      for (std::size_t i = 0; i < pareto.size(); ++i) {
        std::cout << (i ? " " : "") << pareto.members()[i];
      }
      std::cout << "\n";
    }
  });

  // theorem-sweep
  auto* sweep_cmd = add_subcommand("theorem-sweep", "run the characterization regression sweep");
  struct {
    int max_nodes = 6;
    int n3_max_nodes = 4;
    SweepOptions options;
  } sweep_opts;
  sweep_cmd->add_option("--max-nodes", sweep_opts.max_nodes, "largest tree size, n = 2 plan")
      ->check(CLI::Range(3, 6))
      ->capture_default_str();
  sweep_cmd->add_option("--n3-max-nodes", sweep_opts.n3_max_nodes, "largest tree size, n = 3 plan")
      ->check(CLI::Range(0, 5))
      ->capture_default_str();
  sweep_cmd
      ->add_option("--converse-max-nodes", sweep_opts.options.converse_max_nodes,
                   "skip converse checks on larger trees")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  sweep_cmd
      ->add_option("--sample", sweep_opts.options.corruption_sample,
                   "corruptions sampled per tree above the full-enumeration size")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_opts.options.seed, "seed for sampled corruption picks")
      ->capture_default_str();
  sweep_cmd->add_option("--budget", sweep_opts.options.limits.work_budget,
                        "per-check work budget in rule evaluations")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--jobs", sweep_opts.options.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->callback([&] {
    std::vector<TheoremVerdict> verdicts;
    auto catalog = non_isomorphic_trees(3, sweep_opts.max_nodes);
    auto n2 = sweep(catalog, {2}, sweep_opts.options);
    verdicts.insert(verdicts.end(), n2.begin(), n2.end());
    if (sweep_opts.n3_max_nodes >= 3) {
      auto small = non_isomorphic_trees(3, sweep_opts.n3_max_nodes);
      auto n3 = sweep(small, {3}, sweep_opts.options);
      verdicts.insert(verdicts.end(), n3.begin(), n3.end());
    }
    std::sort(verdicts.begin(), verdicts.end(),
              [](const TheoremVerdict& lhs, const TheoremVerdict& rhs) {
                return std::tie(lhs.tree_id, lhs.domain_id, lhs.n) <
                       std::tie(rhs.tree_id, rhs.domain_id, rhs.n);
              });
    bool all_consistent = true;
    for (const auto& verdict : verdicts) all_consistent &= verdict.consistent();
    if (format == "structured") {
      Json items = Json::array();
      for (const auto& verdict : verdicts) items.push_back(verdict_to_json(verdict));
      emit(Json{{"verdicts", items}, {"consistent", all_consistent}});
    } else {
      for (const auto& verdict : verdicts) {
        std::cout << verdict.tree_id << " " << verdict.domain_id << " n=" << verdict.n << " "
                  << verdict.direction << " "
                  << (verdict.consistent() ? "consistent" : "INCONSISTENT") << "\n";
      }
      std::cout << verdicts.size() << " verdicts, "
                << (all_consistent ? "all consistent with the characterization"
                                   : "THEOREM VIOLATION FOUND")
                << "\n";
    }
    if (!all_consistent) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::WorkLimitExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
