#pragma once

#include <vector>

#include "hdbscan/labeling.hpp"
#include "hdbscan/metrics.hpp"

namespace hdbscan {

/// Undirected MST edge with endpoints ordered u < v.
struct MSTEdge {
  int u;
  int v;
  double weight;
};

/// Node of the single-linkage merge tree. Ids 0..n-1 are point leaves;
/// internal nodes n..2n-2 are created in merge order, so ids increase
/// with merge distance and the root is node 2n-2.
struct DendrogramNode {
  int left = -1;
  int right = -1;
  double merge_distance = 0.0;
  int size = 1;
  int rep = 0;  // some leaf inside this subtree
};

class Dendrogram {
 public:
  Dendrogram(std::vector<DendrogramNode> nodes, int n_points);

  int n_points() const { return n_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return node_count() - 1; }
  bool is_leaf(int id) const { return id < n_; }
  const DendrogramNode& node(int id) const { return nodes_[id]; }

  /// Point ids of the subtree rooted at id, depth-first left-to-right.
  std::vector<int> leaves_of(int id) const;

 private:
  std::vector<DendrogramNode> nodes_;
  int n_;
};

/// Prim's algorithm on the dense matrix, O(n^2). Result is sorted
/// ascending by (weight, u, v), which fixes all downstream tie-breaks.
std::vector<MSTEdge> build_mst(const DistanceMatrix& mrd);

/// Union-find sweep over the sorted edges; each edge becomes one internal
/// node with merge_distance equal to the edge weight.
Dendrogram single_linkage(const std::vector<MSTEdge>& edges, int n_points);

/// DBSCAN* at (epsilon, min_pts): connected components of merges with
/// merge_distance <= epsilon, keeping components of at least min_pts
/// points. Clusters are numbered by ascending smallest member index.
Labeling horizontal_cut(const Dendrogram& d, double epsilon, int min_pts);

}  // namespace hdbscan
