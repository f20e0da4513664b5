#pragma once

#include <span>
#include <vector>

#include "hdbscan/condensed.hpp"
#include "hdbscan/labeling.hpp"

namespace hdbscan {

enum class SelectionMethod {
  eom,
  leaf,
  epsilon,
  eom_epsilon,
};

/// A flat cut through the condensed tree: a set of cluster ids with at
/// most one selected cluster on any root-to-leaf path.
struct Selection {
  std::vector<int> selected;  // sorted ascending
  SelectionMethod method = SelectionMethod::eom;
  double epsilon_hat = 0.0;

  bool contains(int cluster_id) const;
};

/// Threshold-aware stability: birth lambda when the cluster was born
/// strictly below 1/epsilon_hat (i.e. it already exists at distance
/// epsilon_hat), zero otherwise. The root always scores zero.
class EpsilonStability {
 public:
  EpsilonStability(int first_cluster_id, std::vector<double> values);

  int first_cluster_id() const { return first_id_; }
  int num_clusters() const { return static_cast<int>(values_.size()); }
  double at(int cluster_id) const { return values_[cluster_id - first_id_]; }

 private:
  int first_id_;
  std::vector<double> values_;
};

/// All leaves of the condensed tree; the root is never selected, so a
/// root-only tree yields an empty selection.
Selection select_leaf(const CondensedTree& ct);

/// Excess-of-mass sweep: bottom-up, a node is kept when its own
/// stability is at least the best total achievable from its subtrees
/// (ties keep the parent); the highest kept node on each path wins.
Selection select_eom(const CondensedTree& ct, const ClusterStats& stats);

EpsilonStability epsilon_stability(const CondensedTree& ct, const ClusterStats& stats,
                                   double epsilon_hat);

/// Replaces base clusters born at distances wider than epsilon_hat with
/// their lowest threshold-stable ancestor, deduplicating when several
/// base clusters share one. epsilon_hat == 0 returns base unchanged.
Selection select_epsilon(const CondensedTree& ct, const EpsilonStability& es,
                         const Selection& base, double epsilon_hat);

/// Points whose exit from the tree happens inside a selected cluster's
/// subtree keep that cluster; everything else is noise. Labels are
/// renumbered 0..k-1 in order of each cluster's smallest member index.
Labeling extract_labels(const CondensedTree& ct, const Selection& sel);

/// True when the root is unselected and every path from a non-root leaf
/// cluster to the root crosses exactly one selected cluster.
bool satisfies_one_per_path(const CondensedTree& ct, const Selection& sel);

namespace detail {

/// select_epsilon with an explicit processing order over base clusters.
/// The result must not depend on the order; tests permute it.
Selection select_epsilon_ordered(const CondensedTree& ct, const EpsilonStability& es,
                                 const Selection& base, double epsilon_hat,
                                 std::span<const int> order);

}  // namespace detail

}  // namespace hdbscan
