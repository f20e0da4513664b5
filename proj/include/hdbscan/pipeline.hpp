#pragma once

#include <optional>

#include "hdbscan/condensed.hpp"
#include "hdbscan/config.hpp"
#include "hdbscan/labeling.hpp"
#include "hdbscan/metrics.hpp"
#include "hdbscan/validation.hpp"

namespace hdbscan {

struct PipelineResult {
  Labeling labels;
  CondensedTree tree;
  std::optional<EvalReport> report;
};

/// End-to-end run: distances, core distances, mutual reachability, MST,
/// dendrogram, condensed tree, then the configured flat extraction
/// (dbscan_star takes a horizontal cut instead of a tree selection; the
/// condensed tree is still built and returned). Failures inside a stage
/// are rethrown as PipelineError naming that stage. Requires
/// cfg.validate() to pass and n > min_pts.
PipelineResult run_pipeline(const PointSet& ps, const RunConfig& cfg,
                            const std::optional<Labeling>& truth = {});

}  // namespace hdbscan
