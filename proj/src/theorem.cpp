#include "sctree/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace sctree {

namespace {

void require_minimally_rich(const Domain& domain) {
  if (!is_minimally_rich(domain)) {
    fail(ErrorKind::PreconditionViolated, "domain is not minimally rich");
  }
}

void require_tree_alphabet(const Tree& tree, const Domain& domain) {
  if (tree.nodes() != domain.alternatives()) {
    fail(ErrorKind::AlphabetMismatch, "domain does not rank the tree's nodes");
  }
}

}  // namespace

TheoremVerdict verify_forward(const Tree& tree, const Domain& domain, int n,
                              const SearchLimits& limits, const std::string& tree_id,
                              const std::string& domain_id) {
  require_tree_alphabet(tree, domain);
  require_minimally_rich(domain);
  for (const auto& p : domain.preferences()) {
    if (!is_single_peaked(p, tree)) {
      fail(ErrorKind::PreconditionViolated,
           "preference " + p.to_string() + " is not single-peaked on the tree");
    }
  }
  TheoremVerdict verdict{tree_id, domain_id, n, "forward", true, true, {}};
  for (const auto& rule : all_extreme_rules(tree)) {
    auto witness = find_manipulation(rule, domain, n, limits);
    verdict.rule_checks.push_back(RuleCheck{rule.leaf(), !witness.has_value(), witness});
    if (witness) verdict.all_extreme_sp = false;
  }
  return verdict;
}

TheoremVerdict verify_converse(const Tree& tree, const Domain& domain, int n,
                               const SearchLimits& limits, const std::string& tree_id,
                               const std::string& domain_id) {
  require_tree_alphabet(tree, domain);
  require_minimally_rich(domain);
  if (n < 2) fail(ErrorKind::PreconditionViolated, "converse direction needs n >= 2");
  bool has_bad = false;
  for (const auto& p : domain.preferences()) {
    if (!is_single_peaked(p, tree)) {
      has_bad = true;
      break;
    }
  }
  if (!has_bad) {
    fail(ErrorKind::PreconditionViolated, "every preference is single-peaked on the tree");
  }
  TheoremVerdict verdict{tree_id, domain_id, n, "converse", false, true, {}};
  for (const auto& rule : all_extreme_rules(tree)) {
    auto witness = find_manipulation(rule, domain, n, limits);
    verdict.rule_checks.push_back(RuleCheck{rule.leaf(), !witness.has_value(), witness});
    if (witness) {
      verdict.all_extreme_sp = false;
      break;  // the theorem asks for existence; first manipulable rule settles it
    }
  }
  return verdict;
}

std::pair<ExtremeRule, ManipulationWitness> construct_proof_witness(const Tree& tree,
                                                                    const Preference& bad_pref,
                                                                    const Domain& domain, int n) {
  require_tree_alphabet(tree, domain);
  require_minimally_rich(domain);
  if (n < 2) fail(ErrorKind::PreconditionViolated, "proof construction needs n >= 2");
  if (std::find(domain.preferences().begin(), domain.preferences().end(), bad_pref) ==
      domain.preferences().end()) {
    fail(ErrorKind::PreconditionViolated, "preference " + bad_pref.to_string() + " is not in the domain");
  }
  auto violation = single_peaked_violation(bad_pref, tree);
  if (!violation) {
    fail(ErrorKind::PreconditionViolated,
         "preference " + bad_pref.to_string() + " is single-peaked on the tree");
  }
  const auto& [a, b] = *violation;  // b on the peak-to-a path, a ranked above b

  // Smallest leaf whose path to b passes through a. One always exists:
  // walking from a away from b ends at such a leaf, and a itself qualifies
  // when a is a leaf.
  std::optional<Alternative> chosen_leaf;
  for (const auto& leaf : tree.leaves()) {
    const auto path = tree.path(leaf, b);
    if (std::find(path.begin(), path.end(), a) != path.end()) {
      chosen_leaf = leaf;
      break;
    }
  }
  if (!chosen_leaf) throw std::logic_error("no leaf found with a on its path to b");

  auto first_with_top = [&](const Alternative& top) {
    const Preference* best = nullptr;
    for (const auto& p : domain.preferences()) {
      if (p.top() == top && (best == nullptr || p < *best)) best = &p;
    }
    return *best;  // minimal richness guarantees a match
  };
  Preference top_b = first_with_top(b);
  Preference top_a = first_with_top(a);

  std::vector<Preference> entries{bad_pref};
  for (int i = 1; i < n; ++i) entries.push_back(top_b);
  Profile truthful = Profile::make(std::move(entries));

  ExtremeRule rule = ExtremeRule::make(tree, *chosen_leaf);
  Alternative truthful_outcome = rule.apply(truthful);
  Alternative deviating_outcome = rule.apply(truthful.with_entry(0, top_a));
  ManipulationWitness witness{1, truthful, top_a, truthful_outcome, deviating_outcome};
  if (truthful_outcome != b || deviating_outcome != a || !revalidate(rule, witness)) {
    throw std::logic_error("proof construction failed to re-validate");
  }
  return {std::move(rule), std::move(witness)};
}

std::vector<Preference> non_single_peaked_permutations(const Tree& tree) {
  std::vector<Preference> out;
  std::vector<Alternative> ranking = tree.nodes();
  do {
    Preference p = Preference::make(ranking, tree.nodes());
    if (!is_single_peaked(p, tree)) out.push_back(p);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

namespace {

struct SweepItem {
  const CatalogTree* entry;
  std::string domain_id;
  Domain domain;
  int n;
  bool forward;
};

// Deterministic partial Fisher-Yates; avoids std::sample and
// uniform_int_distribution so the pick is stable across standard libraries.
std::vector<std::size_t> sample_indices(std::size_t count, std::size_t take, std::uint64_t seed) {
  std::vector<std::size_t> indices(count);
  for (std::size_t i = 0; i < count; ++i) indices[i] = i;
  if (take >= count) return indices;
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < take; ++i) {
    std::size_t j = i + static_cast<std::size_t>(gen() % (count - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(take);
  std::sort(indices.begin(), indices.end());
  return indices;
}

}  // namespace

std::vector<TheoremVerdict> sweep(const std::vector<CatalogTree>& trees,
                                  const std::vector<int>& n_values,
                                  const SweepOptions& options) {
  std::vector<SweepItem> items;
  for (const auto& entry : trees) {
    Domain sp_domain = enumerate_single_peaked(entry.tree);
    std::vector<Domain> corruptions;
    std::vector<std::string> corruption_ids;
    int size = entry.tree.size();
    if (options.converse && size <= options.converse_max_nodes) {
      auto bad_prefs = non_single_peaked_permutations(entry.tree);
      std::vector<std::size_t> picks;
      if (size <= options.converse_full_max_nodes) {
        for (std::size_t i = 0; i < bad_prefs.size(); ++i) picks.push_back(i);
      } else {
        picks = sample_indices(bad_prefs.size(), options.corruption_sample, options.seed);
      }
      for (std::size_t i : picks) {
        std::vector<Preference> prefs = sp_domain.preferences();
        prefs.push_back(bad_prefs[i]);
        corruptions.push_back(Domain::make(entry.tree.nodes(), std::move(prefs)));
        corruption_ids.push_back("sp+" + bad_prefs[i].to_string());
      }
    }
    for (int n : n_values) {
      if (options.forward) {
        items.push_back(SweepItem{&entry, "sp", sp_domain, n, true});
      }
      for (std::size_t i = 0; i < corruptions.size(); ++i) {
        if (n >= 2) {
          items.push_back(SweepItem{&entry, corruption_ids[i], corruptions[i], n, false});
        }
      }
    }
  }

  std::vector<TheoremVerdict> verdicts(items.size());
  std::vector<std::exception_ptr> failures(items.size());
  auto run_item = [&](std::size_t idx) {
    const SweepItem& item = items[idx];
    try {
      if (item.forward) {
        verdicts[idx] = verify_forward(item.entry->tree, item.domain, item.n, options.limits,
                                       item.entry->id, item.domain_id);
      } else {
        verdicts[idx] = verify_converse(item.entry->tree, item.domain, item.n, options.limits,
                                        item.entry->id, item.domain_id);
      }
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  };

  int jobs = std::max(options.jobs, 1);
  if (jobs == 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) run_item(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          std::size_t idx = cursor.fetch_add(1);
          if (idx >= items.size()) return;
          run_item(idx);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::sort(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& lhs, const TheoremVerdict& rhs) {
    return std::tie(lhs.tree_id, lhs.domain_id, lhs.n) < std::tie(rhs.tree_id, rhs.domain_id, rhs.n);
  });
  return verdicts;
}

}  // namespace sctree
