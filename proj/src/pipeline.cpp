#include "hdbscan/pipeline.hpp"

#include <exception>
#include <optional>
#include <utility>

#include "hdbscan/errors.hpp"
#include "hdbscan/hierarchy.hpp"
#include "hdbscan/selection.hpp"

namespace hdbscan {

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

}  // namespace

PipelineResult run_pipeline(const PointSet& ps, const RunConfig& cfg,
                            const std::optional<Labeling>& truth) {
  cfg.validate();

  const DistanceMatrix dm = stage("pairwise_distances", [&] { return pairwise_distances(ps); });
  const CoreDistances cd =
      stage("core_distances", [&] { return core_distances(dm, cfg.min_pts); });
  const DistanceMatrix mrd =
      stage("mutual_reachability", [&] { return mutual_reachability(dm, cd); });
  const auto edges = stage("build_mst", [&] { return build_mst(mrd); });
  const Dendrogram dend =
      stage("single_linkage", [&] { return single_linkage(edges, ps.size()); });
  CondensedTree tree = stage("condense", [&] { return condense(dend, cfg.min_pts); });

  Labeling labels;
  if (cfg.method == Method::dbscan_star) {
    labels = stage("horizontal_cut",
                   [&] { return horizontal_cut(dend, cfg.epsilon, cfg.min_pts); });
  } else {
    labels = stage("selection", [&] {
      const ClusterStats stats = compute_stats(tree);
      Selection sel = cfg.method == Method::eom || cfg.method == Method::eom_epsilon
                          ? select_eom(tree, stats)
                          : select_leaf(tree);
      if (cfg.method == Method::epsilon || cfg.method == Method::eom_epsilon) {
        if (cfg.epsilon > 0.0) {
          const EpsilonStability es = epsilon_stability(tree, stats, cfg.epsilon);
          sel = select_epsilon(tree, es, sel, cfg.epsilon);
        }
        // epsilon 0 keeps the base selection: the threshold method
        // degenerates to plain HDBSCAN.
      }
      return extract_labels(tree, sel);
    });
  }

  std::optional<EvalReport> report;
  if (truth) {
    if (truth->size() != static_cast<std::size_t>(ps.size())) {
      throw PipelineError("evaluate", "truth labeling length does not match point count");
    }
    report = stage("evaluate", [&] { return evaluate(labels, *truth); });
  }
  return PipelineResult{std::move(labels), std::move(tree), std::move(report)};
}

}  // namespace hdbscan
