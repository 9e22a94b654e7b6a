#include "sctree/tree_catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sctree {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Standard Prufer decoding; returns the labeled tree's edges on 0..m-1.
EdgeList decode_prufer(const std::vector<int>& seq, int m) {
  std::vector<int> degree(m, 1);
  for (int x : seq) ++degree[x];
  EdgeList edges;
  for (int x : seq) {
    for (int j = 0; j < m; ++j) {
      if (degree[j] == 1) {
        edges.emplace_back(std::minmax(j, x));
        --degree[j];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int j = 0; j < m; ++j) {
    if (degree[j] == 1) {
      if (u < 0) {
        u = j;
      } else {
        edges.emplace_back(std::minmax(u, j));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string ahu_encode(const std::vector<std::vector<int>>& adjacency, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : adjacency[v]) {
    if (w != parent) child_codes.push_back(ahu_encode(adjacency, w, v));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

// Isomorphism-invariant certificate: AHU encoding rooted at the center,
// or the sorted pair of encodings when the tree is bicentral.
std::string certificate(const EdgeList& edges, int m) {
  std::vector<std::vector<int>> adjacency(m);
  for (auto [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  // Strip leaves layer by layer until one or two centers remain.
  std::vector<int> degree(m), alive_degree(m);
  for (int v = 0; v < m; ++v) degree[v] = static_cast<int>(adjacency[v].size());
  alive_degree = degree;
  std::vector<char> alive(m, 1);
  std::vector<int> layer;
  int remaining = m;
  for (int v = 0; v < m; ++v) {
    if (alive_degree[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive[v] = 0;
      --remaining;
      for (int w : adjacency[v]) {
        if (alive[w] && --alive_degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < m; ++v) {
    if (alive[v]) centers.push_back(v);
  }
  if (centers.size() == 1) return ahu_encode(adjacency, centers[0], -1);
  std::string a = ahu_encode(adjacency, centers[0], centers[1]);
  std::string b = ahu_encode(adjacency, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

}  // namespace

std::vector<CatalogTree> non_isomorphic_trees(int min_nodes, int max_nodes) {
  if (min_nodes < 3) throw std::invalid_argument("catalog trees need at least 3 nodes");
  if (max_nodes > 26) throw std::invalid_argument("catalog labels run a..z");
  std::vector<CatalogTree> out;
  for (int m = min_nodes; m <= max_nodes; ++m) {
    std::map<std::string, EdgeList> classes;  // certificate -> min edge list
    std::vector<int> seq(std::max(m - 2, 0), 0);
    while (true) {
      EdgeList edges = decode_prufer(seq, m);
      std::string cert = certificate(edges, m);
      auto it = classes.find(cert);
      if (it == classes.end()) {
        classes.emplace(cert, edges);
      } else if (edges < it->second) {
        it->second = edges;
      }
      int pos = m - 3;
      while (pos >= 0 && seq[pos] == m - 1) --pos;
      if (pos < 0) break;
      ++seq[pos];
      for (int q = pos + 1; q < m - 2; ++q) seq[q] = 0;
    }
    std::vector<EdgeList> representatives;
    for (auto& [cert, edges] : classes) representatives.push_back(edges);
    std::sort(representatives.begin(), representatives.end());
    int ordinal = 0;
    for (const auto& edges : representatives) {
      std::vector<Alternative> nodes;
      for (int v = 0; v < m; ++v) nodes.push_back(std::string(1, static_cast<char>('a' + v)));
      std::vector<std::pair<Alternative, Alternative>> named;
      for (auto [u, v] : edges) named.emplace_back(nodes[u], nodes[v]);
      out.push_back(CatalogTree{"t" + std::to_string(m) + "_" + std::to_string(++ordinal),
                                Tree::build(nodes, named)});
    }
  }
  return out;
}

}  // namespace sctree
