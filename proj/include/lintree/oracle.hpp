#pragma once

// Brute-force ground truth: enumerate every unlabeled tree on n vertices,
// classify it, and tally by number of high-degree vertices (HDVs).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lintree/tree.hpp"

namespace lintree {

inline constexpr std::size_t kDefaultOracleLimit = 16;
inline constexpr std::size_t kOracleHardCap = 22;

class OracleLimitExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Successor algorithm of Wright, Richmond, Odlyzko and McKay on canonical
/// level sequences. Yields each free tree on n vertices exactly once, in a
/// fixed order, in constant amortized time.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("FreeTreeGenerator: n must be >= 1");
    if (n == 1) {
      layout_ = std::vector<int>{0};
      return;
    }
    std::vector<int> layout;
    for (int i = 0; i <= static_cast<int>(n / 2); ++i) layout.push_back(i);
    for (int i = 1; i < static_cast<int>((n + 1) / 2); ++i) layout.push_back(i);
    layout_ = std::move(layout);
  }

  /// Next tree's level sequence, or nullopt when exhausted.
  std::optional<std::vector<int>> next() {
    if (!layout_) return std::nullopt;
    if (n_ == 1) {
      auto out = std::move(*layout_);
      layout_.reset();
      return out;
    }
    auto tree = next_tree(std::move(*layout_));
    layout_ = next_rooted_tree(tree);
    return tree;
  }

 private:
  struct Split {
    std::vector<int> left;
    std::vector<int> rest;
  };

  // left: the first subtree of the root (levels shifted up by one);
  // rest: the root together with its remaining subtrees.
  static Split split(const std::vector<int>& layout) {
    std::size_t m = layout.size();
    bool seenOne = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (layout[i] != 1) continue;
      if (seenOne) {
        m = i;
        break;
      }
      seenOne = true;
    }
    Split s;
    for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
    s.rest.push_back(0);
    for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
    return s;
  }

  static int height(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

  static std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& pred,
                                                          std::optional<std::size_t> pos = {}) {
    std::size_t p;
    if (pos) {
      p = *pos;
    } else {
      p = pred.size() - 1;
      while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    std::vector<int> result = pred;
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
  }

  static std::vector<int> next_tree(std::vector<int> candidate) {
    const auto [left, rest] = split(candidate);
    const int leftHeight = height(left);
    const int restHeight = height(rest);
    bool valid = restHeight >= leftHeight;
    if (valid && restHeight == leftHeight) {
      if (left.size() > rest.size())
        valid = false;
      else if (left.size() == rest.size() && left > rest)
        valid = false;
    }
    if (valid) return candidate;

    const std::size_t p = left.size();
    auto next = next_rooted_tree(candidate, p);
    if (!next) throw std::logic_error("FreeTreeGenerator: successor missing");
    if (candidate[p] > 2) {
      const int newLeftHeight = height(split(*next).left);
      const auto len = static_cast<std::size_t>(newLeftHeight + 1);
      for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i + 1);
    }
    return std::move(*next);
  }

  std::size_t n_;
  std::optional<std::vector<int>> layout_;
};

inline void check_oracle_limit(std::size_t n, std::size_t limit) {
  if (limit > kOracleHardCap)
    throw OracleLimitExceeded("oracle limit " + std::to_string(limit) + " exceeds hard cap " +
                              std::to_string(kOracleHardCap));
  if (n < 1 || n > limit)
    throw OracleLimitExceeded("oracle enumeration needs 1 <= n <= " + std::to_string(limit) +
                              " (got " + std::to_string(n) + "); raise the limit explicitly");
}

/// Calls visit(tree) for every free tree on n vertices, in generator order.
inline void enumerate_free_trees(std::size_t n, const std::function<void(const TreeGraph&)>& visit,
                                 std::size_t limit = kDefaultOracleLimit) {
  check_oracle_limit(n, limit);
  FreeTreeGenerator gen(n);
  while (auto levels = gen.next()) visit(TreeGraph::from_level_sequence(*levels));
}

struct Classification {
  std::size_t hdvCount = 0;
  bool isLinear = true;
};

/// A tree is linear when the smallest subtree containing all vertices of
/// degree >= 3 is a path.
inline Classification classify(const TreeGraph& t) {
  const auto& adj = t.adjacency();
  const std::size_t n = adj.size();
  std::vector<char> hdv(n, 0);
  Classification c;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() >= 3) {
      hdv[v] = 1;
      ++c.hdvCount;
    }
  if (c.hdvCount <= 2) return c;

  // Strip non-HDV leaves until only the HDV-spanning subtree remains.
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  std::vector<int> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1 && !hdv[v]) queue.push_back(static_cast<int>(v));
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    alive[v] = 0;
    for (int w : adj[v])
      if (alive[w] && --deg[w] == 1 && !hdv[w]) queue.push_back(w);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && deg[v] > 2) {
      c.isLinear = false;
      break;
    }
  return c;
}

struct OracleCensus {
  std::size_t n = 0;
  /// Linear trees by HDV count, index 0..n.
  std::vector<std::uint64_t> linearByK;
  std::uint64_t nonlinear = 0;
  std::uint64_t total = 0;
  /// Fewest HDVs seen on a nonlinear tree (0 when there are none).
  std::size_t minNonlinearHdv = 0;

  std::uint64_t linear() const { return total - nonlinear; }
};

struct OracleOptions {
  std::size_t limit = kDefaultOracleLimit;
  unsigned jobs = 1;
  /// When set, receives the edge list of every nonlinear tree in generator order.
  std::vector<std::string>* nonlinearEdgeLists = nullptr;
};

/// Tally classify() over all free trees on n vertices. With jobs > 1 the
/// generator stream is dealt round-robin to workers; merged totals and the
/// edge-list order do not depend on the job count.
inline OracleCensus oracle_census(std::size_t n, const OracleOptions& options = {}) {
  check_oracle_limit(n, options.limit);
  const unsigned jobs = std::max(1u, options.jobs);

  struct Partial {
    OracleCensus census;
    std::vector<std::pair<std::uint64_t, std::string>> nonlinearTrees;
  };
  std::vector<Partial> partials(jobs);

  auto work = [&](unsigned worker) {
    Partial& part = partials[worker];
    part.census.n = n;
    part.census.linearByK.assign(n + 1, 0);
    FreeTreeGenerator gen(n);
    std::uint64_t index = 0;
    while (auto levels = gen.next()) {
      if (index++ % jobs != worker) continue;
      const auto tree = TreeGraph::from_level_sequence(*levels);
      const auto c = classify(tree);
      ++part.census.total;
      if (c.isLinear) {
        ++part.census.linearByK[c.hdvCount];
        continue;
      }
      if (c.hdvCount < 4)
        throw std::logic_error("oracle_census: nonlinear tree with fewer than 4 HDVs: " +
                               tree.to_edge_list());
      ++part.census.nonlinear;
      if (part.census.minNonlinearHdv == 0 || c.hdvCount < part.census.minNonlinearHdv)
        part.census.minNonlinearHdv = c.hdvCount;
      if (options.nonlinearEdgeLists) part.nonlinearTrees.emplace_back(index - 1, tree.to_edge_list());
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < jobs; ++w)
        threads.emplace_back([&, w] {
          try {
            work(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  OracleCensus out;
  out.n = n;
  out.linearByK.assign(n + 1, 0);
  std::vector<std::pair<std::uint64_t, std::string>> trees;
  for (auto& part : partials) {
    for (std::size_t k = 0; k <= n; ++k) out.linearByK[k] += part.census.linearByK[k];
    out.nonlinear += part.census.nonlinear;
    out.total += part.census.total;
    if (part.census.minNonlinearHdv != 0 &&
        (out.minNonlinearHdv == 0 || part.census.minNonlinearHdv < out.minNonlinearHdv))
      out.minNonlinearHdv = part.census.minNonlinearHdv;
    for (auto& t : part.nonlinearTrees) trees.push_back(std::move(t));
  }
  if (options.nonlinearEdgeLists) {
    std::sort(trees.begin(), trees.end());
    for (auto& t : trees) options.nonlinearEdgeLists->push_back(std::move(t.second));
  }
  return out;
}

}  // namespace lintree
