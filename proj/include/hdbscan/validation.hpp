#pragma once

#include "hdbscan/labeling.hpp"

namespace hdbscan {

/// External-validation summary for one run against ground truth.
struct EvalReport {
  double ari = 0.0;
  double clustered_fraction = 0.0;
  int n_clusters = 0;
  int n_noise = 0;
};

/// Adjusted Rand index over the points labeled in both partitions;
/// noise on either side is dropped first. Computed with exact integer
/// pair counts, so degenerate agreements return exactly 1.0. Throws if
/// sizes differ or fewer than two points survive the noise filter.
double adjusted_rand_index(const Labeling& predicted, const Labeling& truth);

/// Fraction of points with a non-noise predicted label.
double clustered_fraction(const Labeling& predicted);

EvalReport evaluate(const Labeling& predicted, const Labeling& truth);

}  // namespace hdbscan
