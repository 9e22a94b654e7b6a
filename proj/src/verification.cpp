#include "sctree/verification.hpp"

#include <algorithm>
#include <limits>

namespace sctree {

namespace {

// Indexed view of a domain: alternative indices follow the canonical
// sorted order of the alphabet, preference indices the domain order.
struct DomainTables {
  int m = 0;
  int k = 0;
  std::vector<int> top_idx;            // preference -> alphabet index of its top
  std::vector<std::vector<int>> rank;  // preference -> alphabet index -> position

  explicit DomainTables(const Domain& domain) {
    const auto& alphabet = domain.alternatives();
    m = static_cast<int>(alphabet.size());
    k = static_cast<int>(domain.size());
    top_idx.resize(k);
    rank.assign(k, std::vector<int>(m, 0));
    for (int j = 0; j < k; ++j) {
      const auto& ranking = domain.at(j).ranking();
      for (int pos = 0; pos < m; ++pos) {
        int idx = static_cast<int>(
            std::lower_bound(alphabet.begin(), alphabet.end(), ranking[pos]) - alphabet.begin());
        rank[j][idx] = pos;
      }
      top_idx[j] = static_cast<int>(
          std::lower_bound(alphabet.begin(), alphabet.end(), domain.at(j).top()) - alphabet.begin());
    }
  }
};

// Base-k counter over preference indices, last digit fastest, so counter
// order equals lexicographic tuple order.
bool advance(std::vector<int>& tuple, int k) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < k) return true;
    tuple[i] = 0;
  }
  return false;
}

constexpr int kMaxMemoBits = 20;

// Counts one work unit per rule evaluation, memo hit or not, and aborts
// once the budget is spent. Rules that declare tops_only are evaluated
// through a dense top-set-mask memo; anything else goes through apply().
class Evaluator {
 public:
  Evaluator(const Rule& rule, const Domain& domain, const DomainTables& tables,
            std::uint64_t budget)
      : rule_(rule), domain_(domain), tables_(tables), budget_(budget) {
    use_memo_ = rule.tops_only() && tables.m <= kMaxMemoBits;
    if (use_memo_) memo_.assign(std::size_t{1} << tables.m, -1);
  }

  std::uint64_t work() const { return work_; }

  int eval_tuple(const std::vector<int>& tuple) {
    return eval_tuple_substituted(tuple, -1, -1);
  }

  // Outcome of the tuple's profile with entry `agent` replaced by
  // preference `j`; agent < 0 means no substitution.
  int eval_tuple_substituted(const std::vector<int>& tuple, int agent, int j) {
    charge();
    if (use_memo_) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        int pref = (static_cast<int>(i) == agent) ? j : tuple[i];
        mask |= std::uint64_t{1} << tables_.top_idx[pref];
      }
      return eval_mask_unpaid(mask);
    }
    std::vector<Preference> entries;
    entries.reserve(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      entries.push_back(domain_.at((static_cast<int>(i) == agent) ? j : tuple[i]));
    }
    return alt_index(rule_.apply(Profile::make(std::move(entries))));
  }

  // Mask-level evaluation for the tops-only search paths.
  int eval_mask(std::uint64_t top_mask) {
    charge();
    return eval_mask_unpaid(top_mask);
  }

 private:
  void charge() {
    if (++work_ > budget_) {
      fail(ErrorKind::WorkLimitExceeded,
           "budget of " + std::to_string(budget_) + " rule evaluations spent");
    }
  }

  int eval_mask_unpaid(std::uint64_t mask) {
    if (use_memo_) {
      int cached = memo_[mask];
      if (cached >= 0) return cached;
    }
    NodeSet tops;
    for (int v = 0; v < tables_.m; ++v) {
      if (mask >> v & 1) tops.insert(domain_.alternatives()[v]);
    }
    int outcome = alt_index(rule_.apply_to_tops(tops));
    if (use_memo_) memo_[mask] = static_cast<std::int16_t>(outcome);
    return outcome;
  }

  int alt_index(const Alternative& a) const {
    const auto& alphabet = domain_.alternatives();
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end() || *it != a) {
      fail(ErrorKind::UnknownAlternative, "rule returned '" + a + "', not an alternative");
    }
    return static_cast<int>(it - alphabet.begin());
  }

  const Rule& rule_;
  const Domain& domain_;
  const DomainTables& tables_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  bool use_memo_ = false;
  std::vector<std::int16_t> memo_;
};

void require_same_alphabet(const Rule& rule, const Domain& domain) {
  if (rule.alternatives() != domain.alternatives()) {
    fail(ErrorKind::AlphabetMismatch, "rule and domain rank different alternative sets");
  }
}

void require_positive_agents(int n) {
  if (n < 1) fail(ErrorKind::PreconditionViolated, "need at least one agent, got " + std::to_string(n));
}

Profile profile_from_tuple(const Domain& domain, const std::vector<int>& tuple) {
  std::vector<Preference> entries;
  entries.reserve(tuple.size());
  for (int j : tuple) entries.push_back(domain.at(j));
  return Profile::make(std::move(entries));
}

}  // namespace

bool revalidate(const Rule& rule, const ManipulationWitness& w) {
  int n = w.truthful_profile.size();
  if (w.agent < 1 || w.agent > n) return false;
  if (rule.apply(w.truthful_profile) != w.truthful_outcome) return false;
  Profile deviating = w.truthful_profile.with_entry(w.agent - 1, w.misreport);
  if (rule.apply(deviating) != w.deviating_outcome) return false;
  return w.truthful_profile.entry(w.agent - 1).prefers(w.deviating_outcome, w.truthful_outcome);
}

bool revalidate(const Rule& rule, const EfficiencyWitness& w) {
  if (rule.apply(w.profile) != w.outcome) return false;
  if (w.dominating == w.outcome) return false;
  for (const auto& p : w.profile.entries()) {
    if (!p.prefers(w.dominating, w.outcome)) return false;
  }
  return true;
}

namespace {

std::optional<ManipulationWitness> find_manipulation_counted(const Rule& rule,
                                                             const Domain& domain, int n,
                                                             const SearchLimits& limits,
                                                             std::uint64_t& profiles,
                                                             std::uint64_t& work) {
  require_positive_agents(n);
  require_same_alphabet(rule, domain);
  DomainTables tables(domain);
  Evaluator eval(rule, domain, tables, limits.work_budget);
  std::vector<int> tuple(n, 0);
  std::optional<ManipulationWitness> found;
  do {
    ++profiles;
    int x = eval.eval_tuple(tuple);
    for (int agent = 0; agent < n && !found; ++agent) {
      const auto& rank = tables.rank[tuple[agent]];
      for (int j = 0; j < tables.k; ++j) {
        int y = eval.eval_tuple_substituted(tuple, agent, j);
        if (rank[y] < rank[x]) {
          found = ManipulationWitness{agent + 1, profile_from_tuple(domain, tuple),
                                      domain.at(j), domain.alternatives()[x],
                                      domain.alternatives()[y]};
          break;
        }
      }
    }
  } while (!found && advance(tuple, tables.k));
  work = eval.work();
  return found;
}

}  // namespace

std::optional<ManipulationWitness> find_manipulation(const Rule& rule, const Domain& domain,
                                                     int n, const SearchLimits& limits) {
  std::uint64_t profiles = 0, work = 0;
  return find_manipulation_counted(rule, domain, n, limits, profiles, work);
}

bool is_strategy_proof(const Rule& rule, const Domain& domain, int n,
                       const SearchLimits& limits) {
  return !find_manipulation(rule, domain, n, limits).has_value();
}

CheckReport check_strategy_proofness(const Rule& rule, const Domain& domain, int n,
                                     const SearchLimits& limits) {
  CheckReport report;
  report.property = "strategy-proofness";
  std::uint64_t profiles = 0, work = 0;
  auto witness = find_manipulation_counted(rule, domain, n, limits, profiles, work);
  report.holds = !witness.has_value();
  if (witness) report.witness = *witness;
  report.profiles_examined = profiles;
  report.work_units = work;
  return report;
}

CheckReport check_unanimity(const Rule& rule, const Domain& domain, int n) {
  require_positive_agents(n);
  require_same_alphabet(rule, domain);
  CheckReport report;
  report.property = "unanimity";
  report.holds = true;
  DomainTables tables(domain);
  Evaluator eval(rule, domain, tables, std::numeric_limits<std::uint64_t>::max());
  for (int a = 0; a < tables.m && report.holds; ++a) {
    std::vector<int> with_top_a;
    for (int j = 0; j < tables.k; ++j) {
      if (tables.top_idx[j] == a) with_top_a.push_back(j);
    }
    if (with_top_a.empty()) continue;
    const int kk = static_cast<int>(with_top_a.size());
    std::vector<int> local(n, 0);
    do {
      ++report.profiles_examined;
      std::vector<int> tuple(n);
      for (int i = 0; i < n; ++i) tuple[i] = with_top_a[local[i]];
      int outcome = eval.eval_tuple(tuple);
      if (outcome != a) {
        report.holds = false;
        report.witness = UnanimityWitness{profile_from_tuple(domain, tuple),
                                          domain.alternatives()[a],
                                          domain.alternatives()[outcome]};
        break;
      }
    } while (advance(local, kk));
  }
  report.work_units = eval.work();
  return report;
}

CheckReport check_anonymity(const Rule& rule, const Domain& domain, int n) {
  require_positive_agents(n);
  require_same_alphabet(rule, domain);
  CheckReport report;
  report.property = "anonymity";
  report.holds = true;
  DomainTables tables(domain);
  Evaluator eval(rule, domain, tables, std::numeric_limits<std::uint64_t>::max());
  std::vector<int> tuple(n, 0);
  do {
    ++report.profiles_examined;
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == tuple) continue;
    int outcome = eval.eval_tuple(tuple);
    int canonical = eval.eval_tuple(sorted);
    if (outcome != canonical) {
      report.holds = false;
      report.witness = AnonymityWitness{profile_from_tuple(domain, tuple),
                                        profile_from_tuple(domain, sorted),
                                        domain.alternatives()[outcome],
                                        domain.alternatives()[canonical]};
      break;
    }
  } while (advance(tuple, tables.k));
  report.work_units = eval.work();
  return report;
}

NodeSet pareto_set(const Profile& profile) {
  const auto& alphabet = profile.alphabet();
  std::vector<Alternative> undominated;
  for (const auto& a : alphabet) {
    bool dominated = false;
    for (const auto& b : alphabet) {
      if (b == a) continue;
      bool beats_everywhere = true;
      for (const auto& p : profile.entries()) {
        if (!p.prefers(b, a)) {
          beats_everywhere = false;
          break;
        }
      }
      if (beats_everywhere) {
        dominated = true;
        break;
      }
    }
    if (!dominated) undominated.push_back(a);
  }
  return NodeSet(std::move(undominated));
}

CheckReport check_efficiency(const Rule& rule, const Domain& domain, int n,
                             const SearchLimits& limits) {
  require_positive_agents(n);
  require_same_alphabet(rule, domain);
  CheckReport report;
  report.property = "efficiency";
  report.holds = true;
  DomainTables tables(domain);
  Evaluator eval(rule, domain, tables, limits.work_budget);
  std::vector<int> tuple(n, 0);
  do {
    ++report.profiles_examined;
    int x = eval.eval_tuple(tuple);
    for (int b = 0; b < tables.m; ++b) {
      if (b == x) continue;
      bool beats_everywhere = true;
      for (int i = 0; i < n; ++i) {
        if (tables.rank[tuple[i]][b] >= tables.rank[tuple[i]][x]) {
          beats_everywhere = false;
          break;
        }
      }
      if (beats_everywhere) {
        report.holds = false;
        report.witness = EfficiencyWitness{profile_from_tuple(domain, tuple),
                                           domain.alternatives()[b],
                                           domain.alternatives()[x]};
        break;
      }
    }
  } while (report.holds && advance(tuple, tables.k));
  report.work_units = eval.work();
  return report;
}

bool manipulation_exists_tops_only(const Rule& rule, const Domain& domain, int n,
                                   const SearchLimits& limits) {
  require_positive_agents(n);
  require_same_alphabet(rule, domain);
  if (!rule.tops_only()) {
    fail(ErrorKind::PreconditionViolated, "rule is not declared tops-only");
  }
  if (domain.alternatives().size() > 64) {
    fail(ErrorKind::PreconditionViolated, "accelerated search supports at most 64 alternatives");
  }
  DomainTables tables(domain);
  Evaluator eval(rule, domain, tables, limits.work_budget);
  std::vector<int> attained;  // alphabet indices that are some preference's top
  for (int j = 0; j < tables.k; ++j) attained.push_back(tables.top_idx[j]);
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  const int t = static_cast<int>(attained.size());

  // Multisets of size n-1 over attained tops as non-decreasing index tuples.
  std::vector<int> combo(n - 1, 0);
  while (true) {
    std::uint64_t others = 0;
    for (int c : combo) others |= std::uint64_t{1} << attained[c];
    for (int i = 0; i < tables.k; ++i) {
      int x = eval.eval_mask(others | std::uint64_t{1} << tables.top_idx[i]);
      for (int mis = 0; mis < t; ++mis) {
        int y = eval.eval_mask(others | std::uint64_t{1} << attained[mis]);
        if (tables.rank[i][y] < tables.rank[i][x]) return true;
      }
    }
    // next non-decreasing tuple
    int pos = n - 2;
    while (pos >= 0 && combo[pos] == t - 1) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int q = pos + 1; q < n - 1; ++q) combo[q] = combo[pos];
  }
  return false;
}

}  // namespace sctree
