#include "sctree/preference.hpp"

#include <algorithm>

namespace sctree {

Preference Preference::make(std::vector<Alternative> ranking,
                            const std::vector<Alternative>& alphabet) {
  if (ranking.empty()) fail(ErrorKind::NotAPermutation, "empty ranking");
  auto data = std::make_shared<Data>();
  data->ranking = std::move(ranking);
  data->alphabet = alphabet;
  std::sort(data->alphabet.begin(), data->alphabet.end());
  for (std::size_t i = 1; i < data->alphabet.size(); ++i) {
    if (data->alphabet[i - 1] == data->alphabet[i]) {
      fail(ErrorKind::InvalidToken, "duplicate alternative '" + data->alphabet[i] + "'");
    }
  }
  std::vector<Alternative> sorted = data->ranking;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != data->alphabet) {
    fail(ErrorKind::NotAPermutation,
         "ranking of " + std::to_string(data->ranking.size()) + " entries is not a permutation of the " +
             std::to_string(data->alphabet.size()) + " alternatives");
  }
  data->rank_by_alphabet.assign(data->alphabet.size(), -1);
  for (std::size_t pos = 0; pos < data->ranking.size(); ++pos) {
    auto it = std::lower_bound(data->alphabet.begin(), data->alphabet.end(), data->ranking[pos]);
    data->rank_by_alphabet[it - data->alphabet.begin()] = static_cast<int>(pos);
  }
  return Preference(std::move(data));
}

int Preference::rank_of(const Alternative& a) const {
  auto it = std::lower_bound(data_->alphabet.begin(), data_->alphabet.end(), a);
  if (it == data_->alphabet.end() || *it != a) {
    fail(ErrorKind::UnknownAlternative, "'" + a + "' is not ranked");
  }
  return data_->rank_by_alphabet[it - data_->alphabet.begin()];
}

bool Preference::prefers(const Alternative& a, const Alternative& b) const {
  if (a == b) fail(ErrorKind::EqualArguments, "prefers(" + a + "," + b + ")");
  return rank_of(a) < rank_of(b);
}

std::string Preference::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < data_->ranking.size(); ++i) {
    if (i > 0) out += ">";
    out += data_->ranking[i];
  }
  return out;
}

Domain Domain::make(std::vector<Alternative> alternatives,
                    std::vector<Preference> preferences) {
  Domain domain;
  domain.alternatives_ = std::move(alternatives);
  std::sort(domain.alternatives_.begin(), domain.alternatives_.end());
  if (preferences.empty()) fail(ErrorKind::EmptySet, "a domain needs at least one preference");
  for (const auto& p : preferences) {
    if (p.alphabet() != domain.alternatives_) {
      fail(ErrorKind::AlphabetMismatch,
           "preference " + p.to_string() + " does not rank the domain's alternatives");
    }
  }
  for (std::size_t i = 0; i < preferences.size(); ++i) {
    for (std::size_t j = i + 1; j < preferences.size(); ++j) {
      if (preferences[i] == preferences[j]) {
        fail(ErrorKind::DuplicatePreference, preferences[i].to_string() + " listed twice");
      }
    }
  }
  domain.preferences_ = std::move(preferences);
  return domain;
}

Profile Profile::make(std::vector<Preference> entries) {
  if (entries.empty()) fail(ErrorKind::EmptySet, "a profile needs at least one agent");
  for (const auto& p : entries) {
    if (p.alphabet() != entries.front().alphabet()) {
      fail(ErrorKind::AlphabetMismatch, "profile entries rank different alternative sets");
    }
  }
  return Profile(std::move(entries));
}

NodeSet Profile::tops() const {
  NodeSet out;
  for (const auto& p : entries_) out.insert(p.top());
  return out;
}

NodeSet Profile::tops_without(int agent) const {
  NodeSet out;
  for (int i = 0; i < size(); ++i) {
    if (i != agent) out.insert(entries_[i].top());
  }
  return out;
}

Profile Profile::with_entry(int agent, Preference replacement) const {
  if (agent < 0 || agent >= size()) {
    fail(ErrorKind::PreconditionViolated, "agent index " + std::to_string(agent) + " out of range");
  }
  std::vector<Preference> entries = entries_;
  entries[agent] = std::move(replacement);
  return Profile::make(std::move(entries));
}

std::optional<std::pair<Alternative, Alternative>> single_peaked_violation(
    const Preference& p, const Tree& tree) {
  if (p.alphabet() != tree.nodes()) {
    fail(ErrorKind::AlphabetMismatch, "preference does not rank the tree's nodes");
  }
  const int top = tree.index_of(p.top());
  // Pairs scanned in lexicographic (a,b) order; b is on the top-to-a path
  // exactly when the distances add up.
  for (int a = 0; a < tree.size(); ++a) {
    if (a == top) continue;
    for (int b = 0; b < tree.size(); ++b) {
      if (b == a) continue;
      if (tree.distance_index(top, b) + tree.distance_index(b, a) != tree.distance_index(top, a)) {
        continue;
      }
      if (p.prefers(tree.node_at(a), tree.node_at(b))) {
        return std::make_pair(tree.node_at(a), tree.node_at(b));
      }
    }
  }
  return std::nullopt;
}

bool is_single_peaked(const Preference& p, const Tree& tree) {
  return !single_peaked_violation(p, tree).has_value();
}

namespace {

void grow_rankings(const Tree& tree, std::vector<int>& prefix, std::vector<char>& used,
                   std::vector<Preference>& out) {
  const int n = tree.size();
  if (static_cast<int>(prefix.size()) == n) {
    std::vector<Alternative> ranking;
    for (int idx : prefix) ranking.push_back(tree.node_at(idx));
    out.push_back(Preference::make(std::move(ranking), tree.nodes()));
    return;
  }
  // Candidates adjacent to the prefix, ascending, so output is lexicographic.
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool adjacent = false;
    for (int u : prefix) {
      if (tree.distance_index(u, v) == 1) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) continue;
    used[v] = 1;
    prefix.push_back(v);
    grow_rankings(tree, prefix, used, out);
    prefix.pop_back();
    used[v] = 0;
  }
}

}  // namespace

Domain enumerate_single_peaked(const Tree& tree) {
  std::vector<Preference> out;
  std::vector<int> prefix;
  std::vector<char> used(tree.size(), 0);
  for (int peak = 0; peak < tree.size(); ++peak) {
    used[peak] = 1;
    prefix.push_back(peak);
    grow_rankings(tree, prefix, used, out);
    prefix.pop_back();
    used[peak] = 0;
  }
  return Domain::make(tree.nodes(), std::move(out));
}

bool is_minimally_rich(const Domain& domain) {
  NodeSet tops;
  for (const auto& p : domain.preferences()) tops.insert(p.top());
  return tops.size() == domain.alternatives().size();
}

RestrictedDomain restrict_domain(const Domain& domain) {
  NodeSet tops;
  for (const auto& p : domain.preferences()) tops.insert(p.top());
  if (tops.size() < 3) {
    fail(ErrorKind::RestrictionTooSmall,
         "only " + std::to_string(tops.size()) + " alternatives are attained tops");
  }
  std::vector<Preference> restricted;
  for (const auto& p : domain.preferences()) {
    std::vector<Alternative> ranking;
    for (const auto& a : p.ranking()) {
      if (tops.contains(a)) ranking.push_back(a);
    }
    Preference q = Preference::make(std::move(ranking), tops.members());
    if (std::find(restricted.begin(), restricted.end(), q) == restricted.end()) {
      restricted.push_back(q);  // dedup keeps first occurrence
    }
  }
  return RestrictedDomain{tops.members(), Domain::make(tops.members(), std::move(restricted))};
}

}  // namespace sctree
