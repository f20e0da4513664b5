#include "hdbscan/validation.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdbscan {

namespace {

long long pairs(long long x) { return x * (x - 1) / 2; }

}  // namespace

double adjusted_rand_index(const Labeling& predicted, const Labeling& truth) {
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("labelings must have equal length");
  }
  // Contingency table over points neither side marks as noise. All pair
  // counts stay integral, so degenerate cases (single class, singleton
  // everything) come out exact.
  std::map<std::pair<int, int>, long long> cells;
  std::map<int, long long> row_sums, col_sums;
  long long m = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == kNoiseLabel || truth[i] == kNoiseLabel) continue;
    ++cells[{predicted[i], truth[i]}];
    ++row_sums[predicted[i]];
    ++col_sums[truth[i]];
    ++m;
  }
  if (m < 2) {
    throw std::invalid_argument("fewer than 2 points retained after dropping noise");
  }

  long long index = 0, row_pairs = 0, col_pairs = 0;
  for (const auto& [cell, count] : cells) index += pairs(count);
  for (const auto& [label, count] : row_sums) row_pairs += pairs(count);
  for (const auto& [label, count] : col_sums) col_pairs += pairs(count);
  const long long total = pairs(m);

  // ARI = (index - expected) / (max - expected) with expected =
  // row_pairs * col_pairs / total; multiplied through by 2 * total to
  // stay in integers.
  const long long num = 2 * (index * total - row_pairs * col_pairs);
  const long long den = (row_pairs + col_pairs) * total - 2 * row_pairs * col_pairs;
  if (den == 0) return 1.0;  // both partitions trivial and identical in pair terms
  return static_cast<double>(num) / static_cast<double>(den);
}

double clustered_fraction(const Labeling& predicted) {
  if (predicted.empty()) {
    throw std::invalid_argument("labeling must be nonempty");
  }
  const int clustered = static_cast<int>(predicted.size()) - noise_count(predicted);
  return static_cast<double>(clustered) / static_cast<double>(predicted.size());
}

EvalReport evaluate(const Labeling& predicted, const Labeling& truth) {
  EvalReport report;
  report.ari = adjusted_rand_index(predicted, truth);
  report.clustered_fraction = clustered_fraction(predicted);
  report.n_clusters = cluster_count(predicted);
  report.n_noise = noise_count(predicted);
  return report;
}

}  // namespace hdbscan
