#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdbscan/condensed.hpp"
#include "hdbscan/config.hpp"
#include "hdbscan/labeling.hpp"
#include "hdbscan/metrics.hpp"
#include "hdbscan/validation.hpp"

namespace hdbscan {

/// Parsed and preprocessed input: points ready for the pipeline plus
/// ground truth when the file carried a "label" column.
struct Dataset {
  PointSet points;
  std::optional<Labeling> truth;
  std::vector<std::string> feature_names;
};

/// Reads a header-first CSV. Numeric columns become features; an
/// integer column named "label" becomes ground truth. Applies the
/// configured preprocessing: degrees-to-radians for haversine input,
/// then per-feature min-max scaling (constant columns map to 0).
/// Throws DataError with 1-based row/column positions on bad cells,
/// ragged rows, an empty body, or an unreadable file.
Dataset ingest_csv(const std::string& path, const RunConfig& cfg);

/// JSON array of condensed-tree records with keys parent, child,
/// lambda_val, child_size; +infinity lambda serializes as the string
/// "inf". Two-space indentation, byte-stable.
std::string tree_to_json(const CondensedTree& ct);

/// "index,label" CSV, one row per point.
std::string labels_to_csv(const Labeling& labels);

/// JSON object {ari, clustered_fraction, n_clusters, n_noise}.
std::string report_to_json(const EvalReport& report);

/// Feature-named CSV of the points, with a trailing "label" column when
/// labels are given. Floats are written round-trip exact, so output is
/// byte-stable across runs.
std::string points_to_csv(const PointSet& ps, const std::vector<std::string>& feature_names,
                          const Labeling* labels);

/// Writes content to path, or to stdout when path is empty or "-".
/// Throws DataError when the file cannot be opened for writing.
void write_text(const std::string& path, const std::string& content);

}  // namespace hdbscan
