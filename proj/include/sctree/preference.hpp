#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctree/tree.hpp"

namespace sctree {

// A strict total order over an alternative set, stored best first.
// Copies share the underlying data, so passing preferences around is cheap.
class Preference {
 public:
  static Preference make(std::vector<Alternative> ranking,
                         const std::vector<Alternative>& alphabet);

  const std::vector<Alternative>& ranking() const { return data_->ranking; }
  const Alternative& top() const { return data_->ranking.front(); }

  // Alternative set this preference ranks, in canonical sorted order.
  const std::vector<Alternative>& alphabet() const { return data_->alphabet; }

  // Position of a in the ranking, 0 = best.
  int rank_of(const Alternative& a) const;

  // True iff a precedes b in the ranking. Demands a != b, both ranked.
  bool prefers(const Alternative& a, const Alternative& b) const;

  bool operator==(const Preference& other) const {
    return data_ == other.data_ || data_->ranking == other.data_->ranking;
  }
  bool operator<(const Preference& other) const {
    return data_->ranking < other.data_->ranking;
  }

  std::string to_string() const;  // tokens joined by '>'

 private:
  struct Data {
    std::vector<Alternative> ranking;
    std::vector<Alternative> alphabet;    // sorted
    std::vector<int> rank_by_alphabet;    // alphabet index -> position in ranking
  };
  explicit Preference(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// A finite set of distinct preferences over one alternative set.
class Domain {
 public:
  static Domain make(std::vector<Alternative> alternatives,
                     std::vector<Preference> preferences);

  const std::vector<Alternative>& alternatives() const { return alternatives_; }
  const std::vector<Preference>& preferences() const { return preferences_; }
  std::size_t size() const { return preferences_.size(); }
  const Preference& at(std::size_t i) const { return preferences_[i]; }

  bool operator==(const Domain& other) const {
    return alternatives_ == other.alternatives_ && preferences_ == other.preferences_;
  }

 private:
  std::vector<Alternative> alternatives_;  // sorted
  std::vector<Preference> preferences_;    // distinct, order preserved
};

// A length-n tuple of preferences over one alternative set.
class Profile {
 public:
  static Profile make(std::vector<Preference> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const Preference& entry(int i) const { return entries_[i]; }
  const std::vector<Preference>& entries() const { return entries_; }
  const std::vector<Alternative>& alphabet() const { return entries_.front().alphabet(); }

  // Deduplicated set of entry tops; tops_without drops one agent first.
  NodeSet tops() const;
  NodeSet tops_without(int agent) const;

  // Same profile with entry `agent` replaced.
  Profile with_entry(int agent, Preference replacement) const;

  bool operator==(const Profile& other) const = default;

 private:
  explicit Profile(std::vector<Preference> entries) : entries_(std::move(entries)) {}
  std::vector<Preference> entries_;
};

// First (a,b) in lexicographic pair order with b on the peak-to-a path yet
// a ranked above b; empty when the preference is single-peaked on the tree.
std::optional<std::pair<Alternative, Alternative>> single_peaked_violation(
    const Preference& p, const Tree& tree);

bool is_single_peaked(const Preference& p, const Tree& tree);

// All preferences single-peaked on the tree, in lexicographic ranking order.
// Grows rankings top-down keeping every prefix a connected subtree.
Domain enumerate_single_peaked(const Tree& tree);

// True iff every alternative is the top of some preference in the domain.
bool is_minimally_rich(const Domain& domain);

struct RestrictedDomain {
  std::vector<Alternative> attained_tops;  // X', sorted
  Domain domain;                           // restrictions, deduplicated
};

// Restriction of the domain to its attained tops X'; keeps relative order,
// drops duplicate restrictions, demands |X'| >= 3.
RestrictedDomain restrict_domain(const Domain& domain);

}  // namespace sctree
