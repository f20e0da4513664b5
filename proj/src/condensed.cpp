#include "hdbscan/condensed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdbscan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_lambda(double lambda) { return std::min(lambda, kLambdaClamp); }

double lambda_of(double distance) { return distance == 0.0 ? kInf : 1.0 / distance; }

}  // namespace

CondensedTree::CondensedTree(std::vector<CondensedRecord> records, int n_points,
                             int num_clusters)
    : records_(std::move(records)), n_(n_points), num_clusters_(num_clusters) {
  if (n_ < 1) {
    throw std::invalid_argument("CondensedTree requires at least one point");
  }
  if (num_clusters_ < 1) {
    throw std::invalid_argument("CondensedTree requires at least the root cluster");
  }
  parents_.assign(num_clusters_, -1);
  children_.assign(num_clusters_, {});
  birth_.assign(num_clusters_, -1.0);
  birth_[0] = 0.0;  // root

  std::vector<int> size_at_birth(num_clusters_, 0);
  size_at_birth[0] = n_;
  std::vector<int> point_seen(n_, 0);
  std::vector<int> point_exits(num_clusters_, 0);
  std::vector<int> child_points(num_clusters_, 0);

  for (const CondensedRecord& r : records_) {
    if (!is_cluster(r.parent)) {
      throw std::invalid_argument("record parent must be a cluster id");
    }
    if (std::isnan(r.lambda_val) || r.lambda_val <= 0.0) {
      throw std::invalid_argument("record lambda must be positive or +infinity");
    }
    if (r.child_size < 1) {
      throw std::invalid_argument("record child_size must be positive");
    }
    if (r.child >= 0 && r.child < n_) {
      if (r.child_size != 1) {
        throw std::invalid_argument("point-child records must have child_size 1");
      }
      if (point_seen[r.child]++) {
        throw std::invalid_argument("point " + std::to_string(r.child) +
                                    " exits the tree more than once");
      }
      ++point_exits[r.parent - n_];
    } else if (is_cluster(r.child)) {
      if (r.child == root_id()) {
        throw std::invalid_argument("root cannot appear as a child");
      }
      if (r.child <= r.parent) {
        throw std::invalid_argument("cluster children must carry larger ids than parents");
      }
      const int c = r.child - n_;
      if (parents_[c] != -1) {
        throw std::invalid_argument("cluster " + std::to_string(r.child) +
                                    " appears as a child more than once");
      }
      parents_[c] = r.parent;
      birth_[c] = r.lambda_val;
      size_at_birth[c] = r.child_size;
      children_[r.parent - n_].push_back(r.child);
      child_points[r.parent - n_] += r.child_size;
    } else {
      throw std::invalid_argument("record child id out of range");
    }
  }

  for (int c = 1; c < num_clusters_; ++c) {
    if (parents_[c] == -1) {
      throw std::invalid_argument("cluster " + std::to_string(n_ + c) +
                                  " never appears as a child");
    }
  }
  for (int p = 0; p < num_clusters_; ++p) {
    const auto& kids = children_[p];
    if (!kids.empty() && kids.size() != 2) {
      throw std::invalid_argument("true splits must produce exactly two clusters");
    }
    if (kids.size() == 2 && birth_[kids[0] - n_] != birth_[kids[1] - n_]) {
      throw std::invalid_argument("sibling clusters must share one split lambda");
    }
    if (point_exits[p] + child_points[p] != size_at_birth[p]) {
      throw std::invalid_argument("cluster " + std::to_string(n_ + p) +
                                  " does not conserve its points");
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (!point_seen[i]) {
      throw std::invalid_argument("point " + std::to_string(i) + " never exits the tree");
    }
  }
  for (const CondensedRecord& r : records_) {
    const int p = r.parent - n_;
    if (r.lambda_val < birth_[p]) {
      throw std::invalid_argument("record lambda below its parent's birth lambda");
    }
    if (!children_[p].empty() && r.child < n_ &&
        r.lambda_val > birth_[children_[p][0] - n_]) {
      throw std::invalid_argument("point exits after its cluster's true split");
    }
  }
}

ClusterStats::ClusterStats(int first_cluster_id, std::vector<double> lambda_birth,
                           std::vector<double> stability, std::vector<bool> is_leaf,
                           std::vector<int> parent, std::vector<int> size_at_birth)
    : first_id_(first_cluster_id),
      lambda_birth_(std::move(lambda_birth)),
      stability_(std::move(stability)),
      is_leaf_(std::move(is_leaf)),
      parent_(std::move(parent)),
      size_at_birth_(std::move(size_at_birth)) {
  const std::size_t k = stability_.size();
  if (lambda_birth_.size() != k || is_leaf_.size() != k || parent_.size() != k ||
      size_at_birth_.size() != k) {
    throw std::invalid_argument("ClusterStats field vectors must have equal length");
  }
}

CondensedTree condense(const Dendrogram& d, int min_pts) {
  if (min_pts < 2) {
    throw std::invalid_argument("condense requires min_pts >= 2");
  }
  const int n = d.n_points();
  std::vector<CondensedRecord> records;
  records.reserve(2 * n);

  if (n == 1) {
    records.push_back({n, 0, kInf, 1});
    return CondensedTree(std::move(records), n, 1);
  }

  // BFS over clusters. Each queue entry walks one cluster's chain of
  // dendrogram nodes top-down, shedding small sides as noise until the
  // cluster truly splits or runs out of points.
  int next_id = n;
  std::deque<std::pair<int, int>> queue;  // (dendrogram node, cluster id)
  queue.emplace_back(d.root(), next_id++);
  while (!queue.empty()) {
    auto [cur, cluster] = queue.front();
    queue.pop_front();
    while (true) {
      const DendrogramNode& nd = d.node(cur);
      const double lambda = lambda_of(nd.merge_distance);
      const int left_size = d.node(nd.left).size;
      const int right_size = d.node(nd.right).size;
      if (left_size >= min_pts && right_size >= min_pts) {
        const int left_id = next_id++;
        const int right_id = next_id++;
        records.push_back({cluster, left_id, lambda, left_size});
        records.push_back({cluster, right_id, lambda, right_size});
        queue.emplace_back(nd.left, left_id);
        queue.emplace_back(nd.right, right_id);
        break;
      }
      if (left_size < min_pts && right_size < min_pts) {
        for (int p : d.leaves_of(cur)) records.push_back({cluster, p, lambda, 1});
        break;
      }
      const int small = left_size < min_pts ? nd.left : nd.right;
      for (int p : d.leaves_of(small)) records.push_back({cluster, p, lambda, 1});
      cur = small == nd.left ? nd.right : nd.left;
    }
  }
  return CondensedTree(std::move(records), n, next_id - n);
}

ClusterStats compute_stats(const CondensedTree& ct) {
  const int n = ct.n_points();
  const int k = ct.num_clusters();
  std::vector<double> birth(k), stability(k, 0.0);
  std::vector<bool> leaf(k);
  std::vector<int> parent(k), size_at_birth(k, 0);
  for (int c = 0; c < k; ++c) {
    birth[c] = ct.birth_lambda(n + c);
    leaf[c] = ct.children_of(n + c).empty();
    parent[c] = ct.parent_of(n + c);
  }
  size_at_birth[0] = n;
  for (const CondensedRecord& r : ct.records()) {
    const int p = r.parent - n;
    stability[p] += r.child_size * (clamp_lambda(r.lambda_val) - clamp_lambda(birth[p]));
    if (r.child >= n) size_at_birth[r.child - n] = r.child_size;
  }
  return ClusterStats(n, std::move(birth), std::move(stability), std::move(leaf),
                      std::move(parent), std::move(size_at_birth));
}

}  // namespace hdbscan
