#include "sctree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>

namespace sctree {

bool valid_token(const Alternative& token) {
  if (token.empty()) return false;
  for (unsigned char ch : token) {
    if (std::isspace(ch)) return false;
  }
  return true;
}

NodeSet::NodeSet(std::vector<Alternative> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(const Alternative& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

void NodeSet::insert(const Alternative& x) {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) members_.insert(it, x);
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += members_[i];
  }
  out += "}";
  return out;
}

Tree Tree::build(const std::vector<Alternative>& nodes,
                 const std::vector<std::pair<Alternative, Alternative>>& edges) {
  Tree tree;
  for (const auto& node : nodes) {
    if (!valid_token(node)) {
      fail(ErrorKind::InvalidToken, "node id '" + node + "' is empty or has whitespace");
    }
  }
  tree.nodes_ = nodes;
  std::sort(tree.nodes_.begin(), tree.nodes_.end());
  for (std::size_t i = 1; i < tree.nodes_.size(); ++i) {
    if (tree.nodes_[i - 1] == tree.nodes_[i]) {
      fail(ErrorKind::InvalidToken, "duplicate node id '" + tree.nodes_[i] + "'");
    }
  }
  const int n = tree.size();
  if (n < 3) fail(ErrorKind::TooFewNodes, "a tree needs at least 3 nodes, got " + std::to_string(n));

  tree.adjacency_.assign(n, {});
  std::vector<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (!tree.has_node(u)) fail(ErrorKind::UnknownEndpoint, "edge endpoint '" + u + "' is not a node");
    if (!tree.has_node(v)) fail(ErrorKind::UnknownEndpoint, "edge endpoint '" + v + "' is not a node");
    int ui = tree.index_of(u);
    int vi = tree.index_of(v);
    if (ui == vi) fail(ErrorKind::SelfLoop, "edge [" + u + "," + v + "] is a self-loop");
    auto key = std::minmax(ui, vi);
    if (std::find(seen.begin(), seen.end(), std::pair<int, int>(key)) != seen.end()) {
      fail(ErrorKind::DuplicateEdge, "edge [" + u + "," + v + "] listed twice");
    }
    seen.emplace_back(key);
    tree.adjacency_[ui].push_back(vi);
    tree.adjacency_[vi].push_back(ui);
  }
  if (static_cast<int>(seen.size()) > n - 1) {
    fail(ErrorKind::CycleDetected,
         std::to_string(seen.size()) + " edges on " + std::to_string(n) + " nodes");
  }
  for (auto& neighbors : tree.adjacency_) std::sort(neighbors.begin(), neighbors.end());

  // Breadth-first sweep from each node fills the distance and next-hop
  // tables and doubles as the connectivity check.
  tree.dist_.assign(n, std::vector<int>(n, -1));
  tree.next_.assign(n, std::vector<int>(n, -1));
  for (int start = 0; start < n; ++start) {
    auto& dist = tree.dist_[start];
    std::vector<int> parent(n, -1);
    dist[start] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : tree.adjacency_[u]) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        parent[v] = u;
        frontier.push(v);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        fail(ErrorKind::DisconnectedGraph,
             "no path between '" + tree.nodes_[start] + "' and '" + tree.nodes_[v] + "'");
      }
    }
    // next_[v][start] = first hop from v toward start, read off the parents.
    tree.next_[start][start] = start;
    for (int v = 0; v < n; ++v) {
      if (v != start) tree.next_[v][start] = parent[v];
    }
  }
  return tree;
}

std::vector<std::pair<Alternative, Alternative>> Tree::edges() const {
  std::vector<std::pair<Alternative, Alternative>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(nodes_[u], nodes_[v]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Tree::has_node(const Alternative& x) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), x);
}

int Tree::index_of(const Alternative& x) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
  if (it == nodes_.end() || *it != x) {
    fail(ErrorKind::UnknownNode, "'" + x + "' is not a node of the tree");
  }
  return static_cast<int>(it - nodes_.begin());
}

int Tree::degree(const Alternative& x) const {
  return static_cast<int>(adjacency_[index_of(x)].size());
}

std::vector<int> Tree::path_indices(int x, int y) const {
  std::vector<int> out;
  int cur = x;
  out.push_back(cur);
  while (cur != y) {
    cur = next_[cur][y];
    out.push_back(cur);
  }
  return out;
}

NodePath Tree::path(const Alternative& x, const Alternative& y) const {
  NodePath out;
  for (int idx : path_indices(index_of(x), index_of(y))) out.push_back(nodes_[idx]);
  return out;
}

int Tree::distance(const Alternative& x, const Alternative& y) const {
  return dist_[index_of(x)][index_of(y)];
}

namespace {

// H(S) grown incrementally: start at one member and graft each other
// member's path until it meets the part already present. Any node in the
// partial hull has its whole path to the anchor in the hull, so stopping
// at the first marked node is sound.
void mark_hull(const Tree& tree, const std::vector<int>& members, std::vector<char>& marked) {
  int anchor = members.front();
  marked[anchor] = 1;
  for (int s : members) {
    int cur = s;
    while (!marked[cur]) {
      marked[cur] = 1;
      cur = tree.next_hop(cur, anchor);
    }
  }
}

}  // namespace

NodeSet Tree::path_hull(const NodeSet& s) const {
  if (s.empty()) fail(ErrorKind::EmptySet, "path hull of the empty set");
  std::vector<int> members;
  for (const auto& node : s) members.push_back(index_of(node));
  std::vector<char> marked(size(), 0);
  mark_hull(*this, members, marked);
  std::vector<Alternative> out;
  for (int v = 0; v < size(); ++v) {
    if (marked[v]) out.push_back(nodes_[v]);
  }
  return NodeSet(std::move(out));
}

Alternative Tree::distance_minimizer(const Alternative& x, const NodeSet& s) const {
  if (s.empty()) fail(ErrorKind::EmptySet, "distance minimizer over the empty set");
  std::vector<int> members;
  for (const auto& node : s) members.push_back(index_of(node));
  std::vector<char> marked(size(), 0);
  mark_hull(*this, members, marked);
  // Walk from x toward the hull; the first hull node met is the gate.
  int cur = index_of(x);
  while (!marked[cur]) cur = next_[cur][members.front()];
  return nodes_[cur];
}

std::uint64_t Tree::hull_mask(std::uint64_t member_mask) const {
  if (size() > 64) throw std::logic_error("mask queries support at most 64 nodes");
  std::vector<int> members;
  for (int v = 0; v < size(); ++v) {
    if (member_mask >> v & 1) members.push_back(v);
  }
  if (members.empty()) fail(ErrorKind::EmptySet, "path hull of the empty set");
  std::vector<char> marked(size(), 0);
  mark_hull(*this, members, marked);
  std::uint64_t out = 0;
  for (int v = 0; v < size(); ++v) {
    if (marked[v]) out |= std::uint64_t{1} << v;
  }
  return out;
}

int Tree::minimizer_index(int x, std::uint64_t member_mask) const {
  if (size() > 64) throw std::logic_error("mask queries support at most 64 nodes");
  std::vector<int> members;
  for (int v = 0; v < size(); ++v) {
    if (member_mask >> v & 1) members.push_back(v);
  }
  if (members.empty()) fail(ErrorKind::EmptySet, "distance minimizer over the empty set");
  std::vector<char> marked(size(), 0);
  mark_hull(*this, members, marked);
  int cur = x;
  while (!marked[cur]) cur = next_[cur][members.front()];
  return cur;
}

NodeSet Tree::leaves() const {
  std::vector<Alternative> out;
  for (int v = 0; v < size(); ++v) {
    if (adjacency_[v].size() == 1) out.push_back(nodes_[v]);
  }
  return NodeSet(std::move(out));
}

bool Tree::is_line() const {
  for (const auto& neighbors : adjacency_) {
    if (neighbors.size() > 2) return false;
  }
  return true;
}

Tree line_tree(int node_count) {
  if (node_count > 26) throw std::invalid_argument("line_tree labels run a..z");
  std::vector<Alternative> nodes;
  std::vector<std::pair<Alternative, Alternative>> edges;
  for (int i = 0; i < node_count; ++i) {
    nodes.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i > 0) edges.emplace_back(nodes[i - 1], nodes[i]);
  }
  return Tree::build(nodes, edges);
}

Tree star_fixture() {
  return Tree::build({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
}

}  // namespace sctree
