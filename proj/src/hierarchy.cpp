#include "hdbscan/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hdbscan/detail/union_find.hpp"

namespace hdbscan {

Dendrogram::Dendrogram(std::vector<DendrogramNode> nodes, int n_points)
    : nodes_(std::move(nodes)), n_(n_points) {
  if (n_ < 1) {
    throw std::invalid_argument("Dendrogram requires at least one point");
  }
  if (nodes_.size() != static_cast<std::size_t>(2 * n_ - 1)) {
    throw std::invalid_argument("Dendrogram must have exactly 2n - 1 nodes");
  }
  for (int id = n_; id < node_count(); ++id) {
    const DendrogramNode& nd = nodes_[id];
    if (nd.left < 0 || nd.right < 0 || nd.left >= id || nd.right >= id || nd.left == nd.right) {
      throw std::invalid_argument("Dendrogram children must precede their parent");
    }
    if (nd.size != nodes_[nd.left].size + nodes_[nd.right].size) {
      throw std::invalid_argument("Dendrogram node size must equal the sum of child sizes");
    }
    const double child_max =
        std::max(nodes_[nd.left].merge_distance, nodes_[nd.right].merge_distance);
    if (!(nd.merge_distance >= child_max)) {
      throw std::invalid_argument("Dendrogram merge distances must be monotone");
    }
  }
}

std::vector<int> Dendrogram::leaves_of(int id) const {
  std::vector<int> leaves;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (is_leaf(cur)) {
      leaves.push_back(cur);
    } else {
      stack.push_back(nodes_[cur].right);
      stack.push_back(nodes_[cur].left);
    }
  }
  return leaves;
}

std::vector<MSTEdge> build_mst(const DistanceMatrix& mrd) {
  const int n = mrd.size();
  if (n == 0) {
    throw std::invalid_argument("cannot build an MST over zero points");
  }
  std::vector<MSTEdge> edges;
  if (n == 1) return edges;
  edges.reserve(n - 1);

  // Prim's on the dense matrix: grow from point 0, tracking for every
  // outside point its cheapest connection into the tree. Equal weights
  // resolve to the smallest outside index, fixing the edge set.
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<int> best_from(n, 0);
  in_tree[0] = true;
  for (int j = 1; j < n; ++j) best[j] = mrd(0, j);

  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int j = 0; j < n; ++j) {
      if (!in_tree[j] && (pick == -1 || best[j] < best[pick])) pick = j;
    }
    const int from = best_from[pick];
    edges.push_back({std::min(from, pick), std::max(from, pick), best[pick]});
    in_tree[pick] = true;
    for (int j = 0; j < n; ++j) {
      if (!in_tree[j] && mrd(pick, j) < best[j]) {
        best[j] = mrd(pick, j);
        best_from[j] = pick;
      }
    }
  }

  std::sort(edges.begin(), edges.end(), [](const MSTEdge& a, const MSTEdge& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return edges;
}

Dendrogram single_linkage(const std::vector<MSTEdge>& edges, int n_points) {
  if (n_points < 1) {
    throw std::invalid_argument("single_linkage requires at least one point");
  }
  if (edges.size() != static_cast<std::size_t>(n_points - 1)) {
    throw std::invalid_argument("spanning tree must have exactly n - 1 edges");
  }
  std::vector<DendrogramNode> nodes(2 * n_points - 1);
  for (int i = 0; i < n_points; ++i) nodes[i].rep = i;

  // Union-find over all 2n - 1 node ids; merged sets are always rooted at
  // the dendrogram node that created them, so find() yields node ids.
  detail::UnionFind uf(2 * n_points - 1);
  int next_id = n_points;
  double prev_weight = 0.0;
  for (const MSTEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_points || e.v >= n_points || e.u == e.v) {
      throw std::invalid_argument("edge endpoints must be distinct point indices");
    }
    if (e.weight < prev_weight) {
      throw std::invalid_argument("edges must be sorted ascending by weight");
    }
    prev_weight = e.weight;
    const int left = uf.find(e.u);
    const int right = uf.find(e.v);
    if (left == right) {
      throw std::invalid_argument("edge list contains a cycle; not a spanning tree");
    }
    DendrogramNode& parent = nodes[next_id];
    parent.left = left;
    parent.right = right;
    parent.merge_distance = e.weight;
    parent.size = nodes[left].size + nodes[right].size;
    parent.rep = std::min(nodes[left].rep, nodes[right].rep);
    uf.assign(left, next_id);
    uf.assign(right, next_id);
    ++next_id;
  }
  return Dendrogram(std::move(nodes), n_points);
}

Labeling horizontal_cut(const Dendrogram& d, double epsilon, int min_pts) {
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be nonnegative");
  }
  if (min_pts < 1) {
    throw std::invalid_argument("min_pts must be at least 1");
  }
  const int n = d.n_points();
  detail::UnionFind uf(n);
  // Internal nodes appear in merge order, so every merge at or below the
  // cut sees both child subtrees already collapsed; joining the two
  // representatives joins the full components.
  for (int id = n; id < d.node_count(); ++id) {
    const DendrogramNode& nd = d.node(id);
    if (nd.merge_distance <= epsilon) {
      const int a = uf.find(d.node(nd.left).rep);
      uf.assign(a, uf.find(d.node(nd.right).rep));
    }
  }

  std::vector<int> comp_size(n, 0);
  std::map<int, int> first_member;  // component root -> smallest point id
  for (int i = 0; i < n; ++i) {
    const int r = uf.find(i);
    ++comp_size[r];
    if (!first_member.count(r)) first_member[r] = i;
  }

  std::vector<std::pair<int, int>> clusters;  // (smallest member, root)
  for (const auto& [root, first] : first_member) {
    if (comp_size[root] >= min_pts) clusters.emplace_back(first, root);
  }
  std::sort(clusters.begin(), clusters.end());

  std::vector<int> label_of_root(n, kNoiseLabel);
  for (int c = 0; c < static_cast<int>(clusters.size()); ++c) {
    label_of_root[clusters[c].second] = c;
  }
  Labeling labels(n, kNoiseLabel);
  for (int i = 0; i < n; ++i) labels[i] = label_of_root[uf.find(i)];
  return labels;
}

}  // namespace hdbscan
