#pragma once

#include <cstdint>
#include <vector>

#include "hdbscan/labeling.hpp"
#include "hdbscan/metrics.hpp"

namespace hdbscan {

/// Both kinds produce one dominant blob ringed by small satellite blobs
/// over uniform background noise. variable_density uses a smooth
/// Gaussian core; dense_core_sparse_satellites packs the core with tight
/// sub-clumps, the regime where excess-of-mass extraction shatters the
/// core into micro-clusters while satellites survive.
enum class SyntheticKind {
  variable_density,
  dense_core_sparse_satellites,
};

struct SyntheticParams {
  double core_fraction = 0.45;     // minimum share of points in the core blob
  double core_std = 1.0;           // overall spread of the core blob
  int core_clump_points = 0;       // > 0: core is a field of clumps this size
  double core_clump_std = 0.0;     // spread within one clump
  int min_satellites = 4;          // satellite blob count range
  int max_satellites = 8;
  int min_satellite_size = 4;      // points per satellite blob
  int max_satellite_size = 10;
  double satellite_std = 0.15;
  double ring_radius_min = 50.0;   // satellite centers on a jittered ring
  double ring_radius_max = 90.0;
  double noise_fraction = 0.08;    // uniform background, truth label -1
  double field_half_width = 110.0; // noise spans [-w, w] per axis
  double min_separation_factor = 10.0;  // centroid gap vs largest blob std
};

SyntheticParams params_for(SyntheticKind kind);

struct SyntheticDataset {
  PointSet points;
  Labeling truth;
};

/// Deterministic per (kind, seed, n): the same call always produces the
/// same coordinates bit for bit. Blob layouts violating the centroid
/// separation floor are rejected and redrawn deterministically.
/// Throws std::invalid_argument when n < 50.
SyntheticDataset generate_synthetic(SyntheticKind kind, std::uint64_t seed, int n);

}  // namespace hdbscan
