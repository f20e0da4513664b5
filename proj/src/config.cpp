#include "hdbscan/config.hpp"

#include <stdexcept>

namespace hdbscan {

void RunConfig::validate() const {
  if (min_pts < 2) {
    throw std::invalid_argument("--min-pts must be at least 2");
  }
  if (epsilon < 0.0) {
    throw std::invalid_argument("--epsilon must be nonnegative");
  }
  if (scale && metric == Metric::haversine) {
    throw std::invalid_argument("--scale would distort (lat, lon) coordinates; "
                                "it is only supported with --metric euclidean");
  }
  if (degrees && metric == Metric::euclidean) {
    throw std::invalid_argument("--degrees only applies to --metric haversine");
  }
}

SelectionMethod to_selection_method(Method m) {
  switch (m) {
    case Method::eom:
      return SelectionMethod::eom;
    case Method::leaf:
      return SelectionMethod::leaf;
    case Method::epsilon:
      return SelectionMethod::epsilon;
    case Method::eom_epsilon:
      return SelectionMethod::eom_epsilon;
    case Method::dbscan_star:
      break;
  }
  throw std::invalid_argument("dbscan_star does not map to a tree selection method");
}

}  // namespace hdbscan
