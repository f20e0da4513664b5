#pragma once

#include <cstdint>
#include <string>

#include "hdbscan/metrics.hpp"
#include "hdbscan/selection.hpp"

namespace hdbscan {

/// Flat-extraction method exposed on the command line. dbscan_star is a
/// plain horizontal cut at epsilon; the others go through the condensed
/// tree with the matching SelectionMethod.
enum class Method {
  eom,
  leaf,
  dbscan_star,
  epsilon,
  eom_epsilon,
};

struct RunConfig {
  std::string input_path;
  Metric metric = Metric::euclidean;
  int min_pts = 4;
  Method method = Method::eom;
  double epsilon = 0.0;
  bool scale = false;
  bool degrees = false;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on any inconsistent combination:
  /// min_pts < 2, negative epsilon, --scale with haversine, or
  /// --degrees with euclidean.
  void validate() const;
};

SelectionMethod to_selection_method(Method m);

}  // namespace hdbscan
