#include "hdbscan/selection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdbscan {

bool Selection::contains(int cluster_id) const {
  return std::binary_search(selected.begin(), selected.end(), cluster_id);
}

EpsilonStability::EpsilonStability(int first_cluster_id, std::vector<double> values)
    : first_id_(first_cluster_id), values_(std::move(values)) {}

Selection select_leaf(const CondensedTree& ct) {
  Selection sel;
  sel.method = SelectionMethod::leaf;
  for (int c = ct.root_id() + 1; c < ct.root_id() + ct.num_clusters(); ++c) {
    if (ct.children_of(c).empty()) sel.selected.push_back(c);
  }
  return sel;
}

Selection select_eom(const CondensedTree& ct, const ClusterStats& stats) {
  const int n = ct.n_points();
  const int k = ct.num_clusters();
  // Bottom-up over ids (children always carry larger ids than parents):
  // best[c] is the maximum stability any antichain inside c's subtree can
  // collect; chosen[c] marks that c itself achieves it.
  std::vector<double> best(k, 0.0);
  std::vector<bool> chosen(k, false);
  for (int c = k - 1; c >= 1; --c) {
    const int id = n + c;
    const auto& kids = ct.children_of(id);
    if (kids.empty()) {
      best[c] = stats.stability(id);
      chosen[c] = true;
      continue;
    }
    double child_sum = 0.0;
    for (int kid : kids) child_sum += best[kid - n];
    if (stats.stability(id) >= child_sum) {
      best[c] = stats.stability(id);
      chosen[c] = true;
    } else {
      best[c] = child_sum;
    }
  }

  Selection sel;
  sel.method = SelectionMethod::eom;
  // Top-down: the shallowest chosen cluster on each path wins; the root
  // is excluded so the sweep starts from its children.
  std::vector<int> stack(ct.children_of(ct.root_id()));
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (chosen[id - n]) {
      sel.selected.push_back(id);
    } else {
      for (int kid : ct.children_of(id)) stack.push_back(kid);
    }
  }
  std::sort(sel.selected.begin(), sel.selected.end());
  return sel;
}

EpsilonStability epsilon_stability(const CondensedTree& ct, const ClusterStats& stats,
                                   double epsilon_hat) {
  if (!(epsilon_hat > 0.0)) {
    throw std::invalid_argument("epsilon_stability requires epsilon_hat > 0");
  }
  const double lambda_threshold = 1.0 / epsilon_hat;
  std::vector<double> values(ct.num_clusters(), 0.0);
  for (int c = 0; c < ct.num_clusters(); ++c) {
    const double birth = stats.lambda_birth(ct.root_id() + c);
    // Epsilon stable means the cluster split off at a distance strictly
    // wider than epsilon_hat, i.e. birth lambda strictly below 1/eps.
    values[c] = birth < lambda_threshold ? birth : 0.0;
  }
  return EpsilonStability(ct.root_id(), std::move(values));
}

namespace detail {

Selection select_epsilon_ordered(const CondensedTree& ct, const EpsilonStability& es,
                                 const Selection& base, double epsilon_hat,
                                 std::span<const int> order) {
  if (!satisfies_one_per_path(ct, base)) {
    throw std::invalid_argument("base selection violates the one-per-path invariant");
  }
  if (epsilon_hat == 0.0) return base;
  if (epsilon_hat < 0.0) {
    throw std::invalid_argument("epsilon_hat must be nonnegative");
  }

  const int root = ct.root_id();
  std::set<int> result;
  auto covered = [&](int id) {
    for (int a = id; a != -1; a = ct.parent_of(a)) {
      if (result.count(a)) return true;
    }
    return false;
  };
  auto select_ancestor = [&](int id) {
    // Clears previously selected clusters inside id's subtree; selecting
    // an ancestor twice is a no-op, so processing order cannot matter.
    for (auto it = result.begin(); it != result.end();) {
      bool inside = false;
      for (int a = *it; a != -1; a = ct.parent_of(a)) {
        if (a == id) {
          inside = true;
          break;
        }
      }
      it = inside ? result.erase(it) : std::next(it);
    }
    result.insert(id);
  };

  for (int b : order) {
    if (covered(b)) continue;
    if (es.at(b) > 0.0) {
      result.insert(b);
      continue;
    }
    // Not epsilon stable: climb toward the root looking for the nearest
    // epsilon-stable ancestor; settle for the topmost non-root node of
    // the walk when none exists.
    int topmost = b;
    int found = -1;
    for (int a = ct.parent_of(b); a != -1 && a != root; a = ct.parent_of(a)) {
      if (es.at(a) > 0.0) {
        found = a;
        break;
      }
      topmost = a;
    }
    select_ancestor(found != -1 ? found : topmost);
  }

  Selection sel;
  sel.method = base.method == SelectionMethod::eom ? SelectionMethod::eom_epsilon
                                                   : SelectionMethod::epsilon;
  sel.epsilon_hat = epsilon_hat;
  sel.selected.assign(result.begin(), result.end());
  return sel;
}

}  // namespace detail

Selection select_epsilon(const CondensedTree& ct, const EpsilonStability& es,
                         const Selection& base, double epsilon_hat) {
  return detail::select_epsilon_ordered(ct, es, base, epsilon_hat, base.selected);
}

Labeling extract_labels(const CondensedTree& ct, const Selection& sel) {
  const int n = ct.n_points();
  std::vector<int> exit_parent(n, -1);
  for (const CondensedRecord& r : ct.records()) {
    if (r.child < n) exit_parent[r.child] = r.parent;
  }

  // owner[p] is the selected cluster whose subtree holds p's exit record.
  std::vector<int> owner(n, -1);
  std::map<int, int> first_member;  // selected cluster -> smallest point id
  for (int p = 0; p < n; ++p) {
    for (int a = exit_parent[p]; a != -1; a = ct.parent_of(a)) {
      if (sel.contains(a)) {
        owner[p] = a;
        if (!first_member.count(a)) first_member[a] = p;
        break;
      }
    }
  }

  std::vector<std::pair<int, int>> ordering;  // (smallest member, cluster)
  ordering.reserve(first_member.size());
  for (const auto& [cluster, first] : first_member) ordering.emplace_back(first, cluster);
  std::sort(ordering.begin(), ordering.end());
  std::map<int, int> label_of;
  for (int i = 0; i < static_cast<int>(ordering.size()); ++i) {
    label_of[ordering[i].second] = i;
  }

  Labeling labels(n, kNoiseLabel);
  for (int p = 0; p < n; ++p) {
    if (owner[p] != -1) labels[p] = label_of[owner[p]];
  }
  return labels;
}

bool satisfies_one_per_path(const CondensedTree& ct, const Selection& sel) {
  if (sel.contains(ct.root_id())) return false;
  for (int id : sel.selected) {
    if (!ct.is_cluster(id)) return false;
  }
  const int n = ct.n_points();
  for (int c = 1; c < ct.num_clusters(); ++c) {
    const int id = n + c;
    if (!ct.children_of(id).empty()) continue;
    int count = 0;
    for (int a = id; a != -1; a = ct.parent_of(a)) {
      if (sel.contains(a)) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

}  // namespace hdbscan
