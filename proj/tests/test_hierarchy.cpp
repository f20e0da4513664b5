#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hdbscan/hierarchy.hpp"
#include "hdbscan/metrics.hpp"
#include "testsupport/oracles.hpp"

using hdbscan::Dendrogram;
using hdbscan::DistanceMatrix;
using hdbscan::Labeling;
using hdbscan::MSTEdge;
using hdbscan::PointSet;
using hdbscan::single_linkage;

namespace {

DistanceMatrix six_point_mrd() {
  const DistanceMatrix dm = pairwise_distances(testsupport::six_point_set());
  return mutual_reachability(dm, core_distances(dm, 2));
}

}  // namespace

TEST_CASE("mst of three uniformly spaced points") {
  DistanceMatrix dm(3);
  dm.set(0, 1, 2.0);
  dm.set(0, 2, 2.0);
  dm.set(1, 2, 2.0);
  const auto edges = build_mst(dm);
  REQUIRE(edges.size() == 2);
  double total = 0.0;
  for (const MSTEdge& e : edges) {
    CHECK(e.weight == 2.0);
    total += e.weight;
  }
  CHECK(total == 4.0);
}

TEST_CASE("mst of the six point example") {
  const auto edges = build_mst(six_point_mrd());
  REQUIRE(edges.size() == 5);
  std::vector<double> weights;
  double total = 0.0;
  for (const MSTEdge& e : edges) {
    weights.push_back(e.weight);
    total += e.weight;
  }
  const std::vector<double> expected{2.2, 2.2, 3.0, 3.0, 7.8};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(weights[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(total == doctest::Approx(18.2).epsilon(1e-12));
}

TEST_CASE("mst edge cases") {
  CHECK_THROWS_AS(build_mst(DistanceMatrix(0)), std::invalid_argument);
  CHECK(build_mst(DistanceMatrix(1)).empty());

  DistanceMatrix two(2);
  two.set(0, 1, 4.5);
  const auto edges = build_mst(two);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].u == 0);
  CHECK(edges[0].v == 1);
  CHECK(edges[0].weight == 4.5);
}

TEST_CASE("mst edges are sorted by weight then endpoints") {
  testsupport::TestRng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet ps = testsupport::random_points(rng, rng.uniform_int(5, 40));
    const auto edges = build_mst(pairwise_distances(ps));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const MSTEdge& a = edges[i];
      const MSTEdge& b = edges[i + 1];
      CHECK((a.weight < b.weight ||
             (a.weight == b.weight && (a.u < b.u || (a.u == b.u && a.v < b.v)))));
      CHECK(a.u < a.v);
    }
  }
}

TEST_CASE("mst total weight matches the cubic oracle") {
  testsupport::TestRng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(2, 50);
    const PointSet ps = testsupport::random_points(rng, n);
    const DistanceMatrix dm = pairwise_distances(ps);
    const auto edges = build_mst(dm);
    double total = 0.0;
    for (const MSTEdge& e : edges) total += e.weight;
    CHECK(total == doctest::Approx(testsupport::mst_total_weight_oracle(dm)).epsilon(1e-9));
  }
}

TEST_CASE("single linkage on the six point example") {
  const auto edges = build_mst(six_point_mrd());
  const Dendrogram d = single_linkage(edges, 6);
  REQUIRE(d.node_count() == 11);
  CHECK(d.root() == 10);

  // Two size-3 subtrees assembled at 2.2 and 3.0, joined at 7.8.
  const auto& root = d.node(10);
  CHECK(root.size == 6);
  CHECK(root.merge_distance == doctest::Approx(7.8).epsilon(1e-12));
  const auto left = d.leaves_of(root.left);
  const auto right = d.leaves_of(root.right);
  const std::vector<int> a{0, 1, 2}, b{3, 4, 5};
  CHECK(((left == a && right == b) || (left == b && right == a)));
  CHECK(d.node(root.left).size == 3);
  CHECK(d.node(root.right).size == 3);
}

TEST_CASE("single linkage merge distances are the sorted mst weights") {
  testsupport::TestRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.uniform_int(2, 40);
    const PointSet ps = testsupport::random_points(rng, n);
    const auto edges = build_mst(pairwise_distances(ps));
    const Dendrogram d = single_linkage(edges, n);
    for (int k = 0; k < n - 1; ++k) {
      CHECK(d.node(n + k).merge_distance == edges[k].weight);
    }
    // Monotone along every leaf-to-root path by construction; spot-check
    // child vs parent.
    for (int id = n; id < d.node_count(); ++id) {
      const auto& nd = d.node(id);
      if (!d.is_leaf(nd.left)) {
        CHECK(d.node(nd.left).merge_distance <= nd.merge_distance);
      }
      if (!d.is_leaf(nd.right)) {
        CHECK(d.node(nd.right).merge_distance <= nd.merge_distance);
      }
    }
  }
}

TEST_CASE("single linkage handles the forced two point tree") {
  const Dendrogram d = single_linkage({{0, 1, 3.5}}, 2);
  CHECK(d.node_count() == 3);
  CHECK(d.node(2).merge_distance == 3.5);
  CHECK(d.node(2).size == 2);
}

TEST_CASE("single linkage with tied weights keeps monotonicity") {
  const std::vector<MSTEdge> star{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  const Dendrogram d = single_linkage(star, 4);
  for (int id = 4; id < 7; ++id) {
    CHECK(d.node(id).merge_distance == 1.0);
  }
  CHECK(d.node(d.root()).size == 4);
}

TEST_CASE("single linkage rejects malformed edge lists") {
  CHECK_THROWS_AS(single_linkage({{0, 1, 1.0}}, 3), std::invalid_argument);  // too few
  CHECK_THROWS_AS(single_linkage({{0, 1, 1.0}, {0, 1, 2.0}}, 3),
                  std::invalid_argument);  // cycle
  CHECK_THROWS_AS(single_linkage({{0, 1, 2.0}, {1, 2, 1.0}}, 3),
                  std::invalid_argument);  // unsorted
  CHECK_THROWS_AS(single_linkage({{0, 3, 1.0}, {1, 2, 2.0}}, 3),
                  std::invalid_argument);  // endpoint out of range
}

TEST_CASE("horizontal cut of the six point example at 5") {
  const Dendrogram d = single_linkage(build_mst(six_point_mrd()), 6);
  const Labeling labels = horizontal_cut(d, 5.0, 2);
  CHECK(labels == Labeling{0, 0, 0, 1, 1, 1});
}

TEST_CASE("horizontal cut at zero marks distinct points as noise") {
  const Dendrogram d = single_linkage(build_mst(six_point_mrd()), 6);
  const Labeling labels = horizontal_cut(d, 0.0, 2);
  CHECK(labels == Labeling(6, hdbscan::kNoiseLabel));
}

TEST_CASE("horizontal cut above the root merges everything") {
  const Dendrogram d = single_linkage(build_mst(six_point_mrd()), 6);
  const Labeling labels = horizontal_cut(d, 100.0, 2);
  CHECK(labels == Labeling(6, 0));
}

TEST_CASE("horizontal cut boundary is closed") {
  const Dendrogram d = single_linkage(build_mst(six_point_mrd()), 6);
  // 7.8 is the root merge; cutting exactly there keeps one component.
  const Labeling at = horizontal_cut(d, d.node(d.root()).merge_distance, 2);
  CHECK(hdbscan::cluster_count(at) == 1);
}

TEST_CASE("horizontal cut parameter validation") {
  const Dendrogram d = single_linkage(build_mst(six_point_mrd()), 6);
  CHECK_THROWS_AS(horizontal_cut(d, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(horizontal_cut(d, 1.0, 0), std::invalid_argument);
}

TEST_CASE("horizontal cut matches the component oracle") {
  testsupport::TestRng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(2, 100);
    const PointSet ps = testsupport::random_points(rng, n);
    const DistanceMatrix dm = pairwise_distances(ps);
    const int min_pts = rng.uniform_int(1, std::max(1, n / 3));
    const Dendrogram d = single_linkage(build_mst(dm), n);

    // Mix arbitrary cut heights with exact merge distances to exercise
    // the closed boundary.
    double eps = rng.uniform(0.0, 30.0);
    if (trial % 3 == 0 && n > 1) {
      eps = d.node(rng.uniform_int(n, d.node_count() - 1)).merge_distance;
    }
    const Labeling cut = horizontal_cut(d, eps, min_pts);
    const Labeling oracle = testsupport::components_oracle(dm, eps, min_pts);
    CHECK(testsupport::same_partition(cut, oracle));
  }
}
