#pragma once

#include <vector>

#include "hdbscan/hierarchy.hpp"

namespace hdbscan {

/// Stability contributions at lambda = infinity (zero-distance merges,
/// i.e. duplicate points) are clamped to this value so sums stay finite.
inline constexpr double kLambdaClamp = 1e12;

/// One condensed-tree event: either a cluster child (child is a cluster
/// id, child_size its size at birth) or a point leaving as noise
/// (child is a point id, child_size 1). lambda_val is 1/distance of the
/// dendrogram event, +infinity for zero-distance merges.
struct CondensedRecord {
  int parent;
  int child;
  double lambda_val;
  int child_size;
};

/// Pruned hierarchy of candidate clusters. Point ids occupy 0..n-1 and
/// cluster ids n..n+k-1 in breadth-first order from the root (id n).
/// The constructor validates the structural invariants: binary true
/// splits with matching lambda, lambda monotone away from the root,
/// each point exits exactly once, and per-cluster size conservation.
class CondensedTree {
 public:
  CondensedTree(std::vector<CondensedRecord> records, int n_points, int num_clusters);

  const std::vector<CondensedRecord>& records() const { return records_; }
  int n_points() const { return n_; }
  int root_id() const { return n_; }
  int num_clusters() const { return num_clusters_; }
  bool is_cluster(int id) const { return id >= n_ && id < n_ + num_clusters_; }

  /// -1 for the root.
  int parent_of(int cluster_id) const { return parents_[cluster_id - n_]; }
  /// Cluster children only (0 or 2 of them); point exits are not listed.
  const std::vector<int>& children_of(int cluster_id) const { return children_[cluster_id - n_]; }
  /// Lambda at which the cluster split off its parent; 0 for the root.
  double birth_lambda(int cluster_id) const { return birth_[cluster_id - n_]; }

 private:
  std::vector<CondensedRecord> records_;
  int n_;
  int num_clusters_;
  std::vector<int> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<double> birth_;
};

/// Per-cluster summary: birth level, Eq-style lifetime stability, leaf
/// flag, parent id and size at birth. Indexed by cluster id.
class ClusterStats {
 public:
  ClusterStats(int first_cluster_id, std::vector<double> lambda_birth,
               std::vector<double> stability, std::vector<bool> is_leaf,
               std::vector<int> parent, std::vector<int> size_at_birth);

  int first_cluster_id() const { return first_id_; }
  int num_clusters() const { return static_cast<int>(stability_.size()); }

  double lambda_birth(int cluster_id) const { return lambda_birth_[cluster_id - first_id_]; }
  double stability(int cluster_id) const { return stability_[cluster_id - first_id_]; }
  bool is_leaf(int cluster_id) const { return is_leaf_[cluster_id - first_id_]; }
  int parent(int cluster_id) const { return parent_[cluster_id - first_id_]; }
  int size_at_birth(int cluster_id) const { return size_at_birth_[cluster_id - first_id_]; }

 private:
  int first_id_;
  std::vector<double> lambda_birth_;
  std::vector<double> stability_;
  std::vector<bool> is_leaf_;
  std::vector<int> parent_;
  std::vector<int> size_at_birth_;
};

/// Top-down sweep of the dendrogram applying the true-split rule: a split
/// counts only when both sides keep at least min_pts points. Smaller
/// sides exit as noise records at the split level; if both sides are too
/// small the cluster becomes a leaf and all remaining points exit.
CondensedTree condense(const Dendrogram& d, int min_pts);

/// Stability S(C) = sum over members of (departure lambda - birth lambda),
/// where a member departs when it exits as noise or when C truly splits.
ClusterStats compute_stats(const CondensedTree& ct);

}  // namespace hdbscan
