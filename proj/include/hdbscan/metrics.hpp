#pragma once

#include <vector>

namespace hdbscan {

enum class Metric { euclidean, haversine };

/// Mean Earth radius; scales haversine central angles to meters.
inline constexpr double kEarthRadiusMeters = 6'371'000.0;

/// n points in d dimensions plus the metric used to compare them.
/// Haversine rows are (latitude, longitude) in radians; the CLI layer
/// converts from degrees. Coordinates are validated at construction.
class PointSet {
 public:
  PointSet(std::vector<double> coords, int n, int d, Metric metric);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows,
                            Metric metric = Metric::euclidean);

  int size() const { return n_; }
  int dim() const { return d_; }
  Metric metric() const { return metric_; }

  double coord(int i, int j) const { return coords_[static_cast<std::size_t>(i) * d_ + j]; }
  const double* row(int i) const { return coords_.data() + static_cast<std::size_t>(i) * d_; }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;  // row-major n x d
  int n_;
  int d_;
  Metric metric_;
};

/// Dense symmetric n x n matrix with zero diagonal and nonnegative finite
/// entries. Used for both plain metric distances and mutual reachability.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n);

  /// Validates symmetry, zero diagonal, finiteness and nonnegativity.
  static DistanceMatrix from_dense(std::vector<double> values, int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    values_[static_cast<std::size_t>(i) * n_ + j] = v;
    values_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
  int n_;
};

/// Distance of each point to its min_pts-nearest other point. The point
/// itself is not counted as a neighbor.
class CoreDistances {
 public:
  CoreDistances(std::vector<double> values, int min_pts);

  int size() const { return static_cast<int>(values_.size()); }
  int min_pts() const { return min_pts_; }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
  int min_pts_;
};

DistanceMatrix pairwise_distances(const PointSet& ps);

/// The min_pts-th smallest distance from each point to another point.
/// Requires n > min_pts so every point has enough neighbors.
CoreDistances core_distances(const DistanceMatrix& dm, int min_pts);

/// max{d_core(p), d_core(q), d(p, q)} for p != q; diagonal stays zero.
DistanceMatrix mutual_reachability(const DistanceMatrix& dm, const CoreDistances& cd);

}  // namespace hdbscan
