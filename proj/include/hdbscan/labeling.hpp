#pragma once

#include <algorithm>
#include <set>
#include <vector>

namespace hdbscan {

/// Per-point cluster assignment. Cluster labels are consecutive integers
/// starting at 0; points assigned to no cluster carry kNoiseLabel.
using Labeling = std::vector<int>;

inline constexpr int kNoiseLabel = -1;

inline int cluster_count(const Labeling& labels) {
  std::set<int> distinct;
  for (int l : labels) {
    if (l != kNoiseLabel) distinct.insert(l);
  }
  return static_cast<int>(distinct.size());
}

inline int noise_count(const Labeling& labels) {
  return static_cast<int>(std::count(labels.begin(), labels.end(), kNoiseLabel));
}

}  // namespace hdbscan
