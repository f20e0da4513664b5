#pragma once

#include <numeric>
#include <vector>

namespace hdbscan::detail {

/// Disjoint sets with path compression. No union-by-rank: callers here
/// union into explicitly chosen representatives (new dendrogram nodes).
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Attaches the set containing x to the representative rep. rep must
  /// be its own root.
  void assign(int x, int rep) { parent_[find(x)] = rep; }

  /// Grows the universe by one element, its own singleton set; returns
  /// the new element's id.
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(parent_.size()) - 1;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace hdbscan::detail
