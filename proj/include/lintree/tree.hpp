#pragma once

// Unlabeled trees as adjacency lists, with a canonical key that is equal
// for two trees exactly when they are isomorphic.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lintree {

using Edge = std::pair<int, int>;

class InvalidTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TreeGraph {
 public:
  /// Validates that edges form a tree on vertices 0..n-1 (n-1 edges, connected,
  /// no loops or repeated edges); throws InvalidTree otherwise.
  static TreeGraph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0) throw InvalidTree("tree must have at least one vertex");
    if (edges.size() != n - 1)
      throw InvalidTree("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                        " edges, got " + std::to_string(edges.size()));
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw InvalidTree("edge endpoint out of range");
      if (u == v) throw InvalidTree("self loop");
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    // n-1 edges + connected => acyclic, and repeated edges would leave it disconnected.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) throw InvalidTree("graph is not connected");
    return TreeGraph(std::move(adj), edges);
  }

  /// Tree from a level sequence: levels[0] = 0 is the root and each later
  /// vertex hangs off the most recent vertex one level up.
  static TreeGraph from_level_sequence(const std::vector<int>& levels) {
    if (levels.empty() || levels[0] != 0) throw InvalidTree("level sequence must start with 0");
    std::vector<Edge> edges;
    edges.reserve(levels.size() - 1);
    std::vector<int> lastAtLevel{0};
    for (std::size_t i = 1; i < levels.size(); ++i) {
      const int level = levels[i];
      if (level < 1 || static_cast<std::size_t>(level) > lastAtLevel.size())
        throw InvalidTree("level sequence jumps by more than one");
      lastAtLevel.resize(level);
      edges.emplace_back(lastAtLevel[level - 1], static_cast<int>(i));
      lastAtLevel.push_back(static_cast<int>(i));
    }
    return from_edges(levels.size(), edges);
  }

  std::size_t size() const noexcept { return adj_.size(); }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t degree(int v) const { return adj_.at(v).size(); }

  /// Canonical level sequence rooted at the center; for bicentral trees the
  /// larger of the two center rootings.
  const std::vector<int>& canonical_form() const noexcept { return canonical_; }

  /// Vertices of the center (one or two), found by repeatedly stripping leaves.
  std::vector<int> centers() const {
    const std::size_t n = size();
    if (n <= 2) {
      std::vector<int> c;
      for (std::size_t v = 0; v < n; ++v) c.push_back(static_cast<int>(v));
      return c;
    }
    std::vector<std::size_t> deg(n);
    std::vector<int> layer;
    for (std::size_t v = 0; v < n; ++v) {
      deg[v] = adj_[v].size();
      if (deg[v] == 1) layer.push_back(static_cast<int>(v));
    }
    std::size_t remaining = n;
    while (remaining > 2) {
      remaining -= layer.size();
      std::vector<int> next;
      for (int v : layer)
        for (int w : adj_[v])
          if (--deg[w] == 1) next.push_back(w);
      layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
  }

  /// Edge list text "n; u1-v1,u2-v2,...".
  std::string to_edge_list() const {
    std::string out = std::to_string(size()) + ";";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out += (i == 0 ? " " : ",");
      out += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
    }
    return out;
  }

 private:
  TreeGraph(std::vector<std::vector<int>> adj, std::vector<Edge> edges)
      : adj_(std::move(adj)), edges_(std::move(edges)) {
    for (int c : centers()) {
      auto form = rooted_form(c, -1, 0);
      if (form > canonical_) canonical_ = std::move(form);
    }
  }

  // Children's canonical sequences are sorted in decreasing lexicographic
  // order, which makes the concatenation a complete rooted-tree invariant.
  std::vector<int> rooted_form(int v, int parent, int depth) const {
    std::vector<std::vector<int>> children;
    for (int w : adj_[v])
      if (w != parent) children.push_back(rooted_form(w, v, depth + 1));
    std::sort(children.begin(), children.end(), std::greater<>());
    std::vector<int> out{depth};
    for (auto& c : children) out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> canonical_;
};

}  // namespace lintree
