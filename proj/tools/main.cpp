#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hdbscan/config.hpp"
#include "hdbscan/errors.hpp"
#include "hdbscan/io.hpp"
#include "hdbscan/pipeline.hpp"
#include "hdbscan/synthetic.hpp"

namespace {

// Exit codes: 0 success, 1 usage error (bad flags or inconsistent
// config), 2 data error (unreadable/malformed input or a pipeline
// failure on loaded data).
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct ClusterOpts {
  hdbscan::RunConfig cfg;
  std::string output;
  std::string plot_data;
};

void add_common_flags(CLI::App* cmd, ClusterOpts& opts) {
  const std::map<std::string, hdbscan::Metric> metrics{
      {"euclidean", hdbscan::Metric::euclidean},
      {"haversine", hdbscan::Metric::haversine}};
  const std::map<std::string, hdbscan::Method> methods{
      {"eom", hdbscan::Method::eom},
      {"leaf", hdbscan::Method::leaf},
      {"epsilon", hdbscan::Method::epsilon},
      {"eom_epsilon", hdbscan::Method::eom_epsilon},
      {"dbscan_star", hdbscan::Method::dbscan_star}};

  cmd->add_option("input", opts.cfg.input_path, "Input CSV (header row required)")
      ->required();
  cmd->add_option("--min-pts", opts.cfg.min_pts,
                  "Neighbor count for core distances and minimum cluster size")
      ->capture_default_str();
  cmd->add_option("--method", opts.cfg.method, "Flat extraction method")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case))
      ->default_str("eom");
  cmd->add_option("--epsilon", opts.cfg.epsilon,
                  "Distance threshold: merge floor for epsilon/eom_epsilon, cut "
                  "level for dbscan_star")
      ->capture_default_str();
  cmd->add_option("--metric", opts.cfg.metric, "Distance metric")
      ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case))
      ->default_str("euclidean");
  cmd->add_flag("--scale", opts.cfg.scale, "Min-max scale each feature to [0, 1]");
  cmd->add_flag("--degrees", opts.cfg.degrees,
                "Treat haversine input as degrees and convert to radians");
  cmd->add_option("--output", opts.output, "Output path (default: stdout)");
}

int run_cluster(const ClusterOpts& opts, bool emit_tree) {
  const hdbscan::Dataset data = hdbscan::ingest_csv(opts.cfg.input_path, opts.cfg);
  const hdbscan::PipelineResult result = hdbscan::run_pipeline(data.points, opts.cfg);
  if (emit_tree) {
    hdbscan::write_text(opts.output, hdbscan::tree_to_json(result.tree));
  } else {
    hdbscan::write_text(opts.output, hdbscan::labels_to_csv(result.labels));
  }
  if (!opts.plot_data.empty()) {
    hdbscan::write_text(opts.plot_data, hdbscan::points_to_csv(data.points,
                                                               data.feature_names,
                                                               &result.labels));
  }
  return 0;
}

int run_evaluate(const ClusterOpts& opts) {
  const hdbscan::Dataset data = hdbscan::ingest_csv(opts.cfg.input_path, opts.cfg);
  if (!data.truth) {
    throw hdbscan::DataError("evaluate requires a 'label' column with ground truth");
  }
  const hdbscan::PipelineResult result =
      hdbscan::run_pipeline(data.points, opts.cfg, data.truth);
  hdbscan::write_text(opts.output, hdbscan::report_to_json(*result.report));
  return 0;
}

struct GenerateOpts {
  hdbscan::SyntheticKind kind = hdbscan::SyntheticKind::dense_core_sparse_satellites;
  std::uint64_t seed = 1;
  int n = 500;
  std::string output;
};

int run_generate(const GenerateOpts& opts) {
  const hdbscan::SyntheticDataset data =
      hdbscan::generate_synthetic(opts.kind, opts.seed, opts.n);
  const std::string csv =
      hdbscan::points_to_csv(data.points, {"x", "y"}, &data.truth);
  hdbscan::write_text(opts.output, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-based hierarchical clustering with flat extraction"};
  app.require_subcommand(1);

  ClusterOpts cluster_opts;
  CLI::App* cluster = app.add_subcommand("cluster", "Cluster a CSV and emit labels");
  add_common_flags(cluster, cluster_opts);
  cluster->add_option("--plot-data", cluster_opts.plot_data,
                      "Also write preprocessed points with predicted labels");

  ClusterOpts evaluate_opts;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Cluster and score against the label column");
  add_common_flags(evaluate, evaluate_opts);

  ClusterOpts tree_opts;
  CLI::App* export_tree =
      app.add_subcommand("export-tree", "Cluster and emit the condensed tree as JSON");
  add_common_flags(export_tree, tree_opts);

  GenerateOpts generate_opts;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a seeded synthetic dataset as CSV");
  const std::map<std::string, hdbscan::SyntheticKind> kinds{
      {"variable_density", hdbscan::SyntheticKind::variable_density},
      {"dense_core_sparse_satellites",
       hdbscan::SyntheticKind::dense_core_sparse_satellites}};
  generate->add_option("--kind", generate_opts.kind, "Dataset layout")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case))
      ->default_str("dense_core_sparse_satellites");
  generate->add_option("--seed", generate_opts.seed, "Generator seed")
      ->capture_default_str();
  generate->add_option("--n", generate_opts.n, "Number of points (>= 50)")
      ->capture_default_str();
  generate->add_option("--output", generate_opts.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) {
      if (generate_opts.n < 50) {
        std::cerr << "error: --n must be at least 50\n";
        return kExitUsage;
      }
      return run_generate(generate_opts);
    }
    const ClusterOpts& opts =
        *cluster ? cluster_opts : (*evaluate ? evaluate_opts : tree_opts);
    try {
      opts.cfg.validate();
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (*cluster) return run_cluster(opts, /*emit_tree=*/false);
    if (*evaluate) return run_evaluate(opts);
    return run_cluster(tree_opts, /*emit_tree=*/true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
