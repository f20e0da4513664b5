#include "hdbscan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdbscan {

namespace {

// Latitude bounds check leaves one ulp of slack so values arriving via
// degree conversion of exactly +-90 still pass.
constexpr double kLatSlack = 1e-12;

double haversine_meters(double lat1, double lon1, double lat2, double lon2) {
  const double sin_dlat = std::sin((lat2 - lat1) / 2.0);
  const double sin_dlon = std::sin((lon2 - lon1) / 2.0);
  const double a =
      sin_dlat * sin_dlat + std::cos(lat1) * std::cos(lat2) * sin_dlon * sin_dlon;
  const double c = 2.0 * std::asin(std::min(1.0, std::sqrt(a)));
  return kEarthRadiusMeters * c;
}

}  // namespace

PointSet::PointSet(std::vector<double> coords, int n, int d, Metric metric)
    : coords_(std::move(coords)), n_(n), d_(d), metric_(metric) {
  if (n_ < 1 || d_ < 1) {
    throw std::invalid_argument("PointSet requires n >= 1 and d >= 1");
  }
  if (coords_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(d_)) {
    throw std::invalid_argument("PointSet coordinate buffer size does not match n * d");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("PointSet coordinates must be finite");
    }
  }
  if (metric_ == Metric::haversine) {
    if (d_ != 2) {
      throw std::invalid_argument("haversine requires exactly 2 coordinates (lat, lon)");
    }
    const double half_pi = std::numbers::pi / 2.0;
    for (int i = 0; i < n_; ++i) {
      const double lat = coord(i, 0);
      if (lat < -half_pi - kLatSlack || lat > half_pi + kLatSlack) {
        throw std::invalid_argument("haversine latitude out of [-pi/2, pi/2] at point " +
                                    std::to_string(i));
      }
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows, Metric metric) {
  if (rows.empty()) {
    throw std::invalid_argument("PointSet requires at least one point");
  }
  const std::size_t d = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * d);
  for (const auto& row : rows) {
    if (row.size() != d) {
      throw std::invalid_argument("PointSet rows must share one dimension");
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointSet(std::move(coords), static_cast<int>(rows.size()), static_cast<int>(d),
                  metric);
}

DistanceMatrix::DistanceMatrix(int n) : n_(n) {
  if (n_ < 0) {
    throw std::invalid_argument("DistanceMatrix size must be nonnegative");
  }
  values_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
}

DistanceMatrix DistanceMatrix::from_dense(std::vector<double> values, int n) {
  if (n < 0 || values.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("DistanceMatrix buffer size does not match n * n");
  }
  DistanceMatrix dm(n);
  dm.values_ = std::move(values);
  for (int i = 0; i < n; ++i) {
    if (dm(i, i) != 0.0) {
      throw std::invalid_argument("DistanceMatrix diagonal must be zero");
    }
    for (int j = 0; j < n; ++j) {
      const double v = dm(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("DistanceMatrix entries must be finite and nonnegative");
      }
      if (dm(j, i) != v) {
        throw std::invalid_argument("DistanceMatrix must be symmetric");
      }
    }
  }
  return dm;
}

CoreDistances::CoreDistances(std::vector<double> values, int min_pts)
    : values_(std::move(values)), min_pts_(min_pts) {
  if (min_pts_ < 1) {
    throw std::invalid_argument("min_pts must be at least 1");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("core distances must be finite and nonnegative");
    }
  }
}

DistanceMatrix pairwise_distances(const PointSet& ps) {
  const int n = ps.size();
  const int d = ps.dim();
  DistanceMatrix dm(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dist = 0.0;
      if (ps.metric() == Metric::euclidean) {
        double sum = 0.0;
        const double* a = ps.row(i);
        const double* b = ps.row(j);
        for (int k = 0; k < d; ++k) {
          const double diff = a[k] - b[k];
          sum += diff * diff;
        }
        dist = std::sqrt(sum);
      } else {
        dist = haversine_meters(ps.coord(i, 0), ps.coord(i, 1), ps.coord(j, 0),
                                ps.coord(j, 1));
      }
      dm.set(i, j, dist);
    }
  }
  return dm;
}

CoreDistances core_distances(const DistanceMatrix& dm, int min_pts) {
  const int n = dm.size();
  if (min_pts < 1) {
    throw std::invalid_argument("min_pts must be at least 1");
  }
  if (min_pts >= n) {
    throw std::invalid_argument("min_pts must be smaller than the point count");
  }
  std::vector<double> core(n, 0.0);
  std::vector<double> row;
  row.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    row.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i) row.push_back(dm(i, j));
    }
    std::nth_element(row.begin(), row.begin() + (min_pts - 1), row.end());
    core[i] = row[min_pts - 1];
  }
  return CoreDistances(std::move(core), min_pts);
}

DistanceMatrix mutual_reachability(const DistanceMatrix& dm, const CoreDistances& cd) {
  if (dm.size() != cd.size()) {
    throw std::invalid_argument("distance matrix and core distances disagree on n");
  }
  const int n = dm.size();
  DistanceMatrix mrd(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      mrd.set(i, j, std::max({cd[i], cd[j], dm(i, j)}));
    }
  }
  return mrd;
}

}  // namespace hdbscan
