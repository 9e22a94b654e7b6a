#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sctree/errors.hpp"

namespace sctree {

// An alternative is a short text token: nonempty, no whitespace.
// Canonical order everywhere is lexicographic token order.
using Alternative = std::string;

// A path is an ordered list of distinct nodes, consecutive ones adjacent.
using NodePath = std::vector<Alternative>;

bool valid_token(const Alternative& token);

// A set of alternatives kept as a sorted, duplicate-free member list.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<Alternative> members);

  static NodeSet of(std::initializer_list<Alternative> members) {
    return NodeSet(std::vector<Alternative>(members));
  }

  bool contains(const Alternative& x) const;
  void insert(const Alternative& x);
  bool is_subset_of(const NodeSet& other) const;

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Alternative>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const NodeSet& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Alternative> members_;  // sorted, unique
};

// A validated tree on the alternative set: connected, acyclic, |nodes| >= 3.
// Immutable after construction; all queries are pure.
class Tree {
 public:
  static Tree build(const std::vector<Alternative>& nodes,
                    const std::vector<std::pair<Alternative, Alternative>>& edges);

  // Nodes in canonical sorted order.
  const std::vector<Alternative>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  // Canonical edge list: each pair sorted, list sorted.
  std::vector<std::pair<Alternative, Alternative>> edges() const;

  bool has_node(const Alternative& x) const;
  int index_of(const Alternative& x) const;  // throws UnknownNode
  const Alternative& node_at(int index) const { return nodes_[index]; }

  int degree(const Alternative& x) const;

  // The unique path from x to y; path(x,x) = [x].
  NodePath path(const Alternative& x, const Alternative& y) const;

  // Edge-count distance, |path(x,y)| - 1.
  int distance(const Alternative& x, const Alternative& y) const;

  // H(S): union of all pairwise paths among members of S.
  NodeSet path_hull(const NodeSet& s) const;

  // The unique member of H(S) closest to x; the gate node through which
  // every path from x enters H(S).
  Alternative distance_minimizer(const Alternative& x, const NodeSet& s) const;

  // All degree-1 nodes; a tree has at least two.
  NodeSet leaves() const;

  // True iff every node has degree <= 2.
  bool is_line() const;

  bool operator==(const Tree& other) const {
    return nodes_ == other.nodes_ && adjacency_ == other.adjacency_;
  }

  // Index-level queries used by the verification hot paths. Indices refer
  // to positions in nodes(); masks are bitsets over those indices.
  int distance_index(int x, int y) const { return dist_[x][y]; }
  int next_hop(int from, int toward) const { return next_[from][toward]; }
  std::uint64_t hull_mask(std::uint64_t member_mask) const;
  int minimizer_index(int x, std::uint64_t member_mask) const;
  std::vector<int> path_indices(int x, int y) const;

 private:
  Tree() = default;

  std::vector<Alternative> nodes_;          // sorted
  std::vector<std::vector<int>> adjacency_; // sorted neighbor lists
  std::vector<std::vector<int>> dist_;      // all-pairs edge distances
  std::vector<std::vector<int>> next_;      // next_[x][y]: neighbor of x toward y
};

// Named small fixtures used across tests and docs: a line a-b-c-d and a
// star with center c and leaves x, y, z.
Tree line_tree(int node_count);
Tree star_fixture();

}  // namespace sctree
