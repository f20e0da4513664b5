#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hdbscan/metrics.hpp"
#include "testsupport/oracles.hpp"

using hdbscan::CoreDistances;
using hdbscan::DistanceMatrix;
using hdbscan::Metric;
using hdbscan::PointSet;

TEST_CASE("pairwise distances of two 1-D points") {
  const PointSet ps = PointSet::from_rows({{0.0}, {3.0}});
  const DistanceMatrix dm = pairwise_distances(ps);
  CHECK(dm(0, 0) == 0.0);
  CHECK(dm(1, 1) == 0.0);
  CHECK(dm(0, 1) == 3.0);
  CHECK(dm(1, 0) == 3.0);
}

TEST_CASE("identical points give a zero matrix") {
  const PointSet ps = PointSet::from_rows({{1.0, 1.0}, {1.0, 1.0}});
  const DistanceMatrix dm = pairwise_distances(ps);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(dm(i, j) == 0.0);
  }
}

TEST_CASE("haversine distance of one degree of longitude at the equator") {
  const double deg = std::numbers::pi / 180.0;
  const PointSet ps = PointSet::from_rows({{0.0, 0.0}, {0.0, deg}}, Metric::haversine);
  const DistanceMatrix dm = pairwise_distances(ps);
  CHECK(std::abs(dm(0, 1) - 111195.0) < 1.0);
}

TEST_CASE("haversine symmetry and antipodal stability") {
  const double half_pi = std::numbers::pi / 2.0;
  const PointSet ps =
      PointSet::from_rows({{half_pi, 0.0}, {-half_pi, 0.0}, {0.1, 2.0}}, Metric::haversine);
  const DistanceMatrix dm = pairwise_distances(ps);
  for (int i = 0; i < 3; ++i) {
    CHECK(dm(i, i) == 0.0);
    for (int j = 0; j < 3; ++j) {
      CHECK(dm(i, j) == dm(j, i));
      CHECK(std::isfinite(dm(i, j)));
    }
  }
  // Pole to pole is half the great circle.
  CHECK(dm(0, 1) ==
        doctest::Approx(hdbscan::kEarthRadiusMeters * std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("point set construction rejects bad input") {
  CHECK_THROWS_AS(PointSet::from_rows({}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet::from_rows({{std::nan("")}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet::from_rows({{1.0, 2.0, 3.0}}, Metric::haversine),
                  std::invalid_argument);
  CHECK_THROWS_AS(PointSet::from_rows({{2.0, 0.0}}, Metric::haversine),
                  std::invalid_argument);  // latitude beyond pi/2
}

TEST_CASE("euclidean triangle inequality on random triples") {
  testsupport::TestRng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet ps = testsupport::random_points(rng, 3);
    const DistanceMatrix dm = pairwise_distances(ps);
    CHECK(dm(0, 2) <= dm(0, 1) + dm(1, 2) + 1e-9);
  }
}

TEST_CASE("core distances of the six point example") {
  const DistanceMatrix dm = pairwise_distances(testsupport::six_point_set());
  const CoreDistances cd = core_distances(dm, 2);
  const std::vector<double> expected{2.2, 1.2, 2.2, 3.0, 1.6, 3.0};
  REQUIRE(cd.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(cd[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("core distance with min_pts 1 is the nearest other neighbor") {
  const DistanceMatrix dm = pairwise_distances(testsupport::six_point_set());
  const CoreDistances cd = core_distances(dm, 1);
  CHECK(cd[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cd[3] == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("duplicate points have zero core distance at min_pts 1") {
  const PointSet ps = PointSet::from_rows({{0.0}, {0.0}, {5.0}});
  const CoreDistances cd = core_distances(pairwise_distances(ps), 1);
  CHECK(cd[0] == 0.0);
  CHECK(cd[1] == 0.0);
  CHECK(cd[2] == 5.0);
}

TEST_CASE("core distance parameter validation") {
  const DistanceMatrix dm = pairwise_distances(testsupport::six_point_set());
  CHECK_THROWS_AS(core_distances(dm, 0), std::invalid_argument);
  CHECK_THROWS_AS(core_distances(dm, 6), std::invalid_argument);
  CHECK_THROWS_AS(core_distances(dm, 7), std::invalid_argument);
  CHECK_NOTHROW(core_distances(dm, 5));
}

TEST_CASE("core distances are monotone in min_pts and match the oracle") {
  testsupport::TestRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(6, 30);
    const PointSet ps = testsupport::random_points(rng, n);
    const DistanceMatrix dm = pairwise_distances(ps);
    for (int k = 1; k + 1 < n; ++k) {
      const CoreDistances lo = core_distances(dm, k);
      const CoreDistances hi = core_distances(dm, k + 1);
      for (int i = 0; i < n; ++i) {
        CHECK(lo[i] <= hi[i]);
        CHECK(lo[i] == testsupport::core_distance_oracle(dm, i, k));
      }
    }
  }
}

TEST_CASE("mutual reachability takes the max of the three quantities") {
  DistanceMatrix dm(2);
  dm.set(0, 1, 1.0);
  const CoreDistances cd({2.2, 1.2}, 1);
  const DistanceMatrix mrd = mutual_reachability(dm, cd);
  CHECK(mrd(0, 1) == 2.2);
  CHECK(mrd(1, 0) == 2.2);
  CHECK(mrd(0, 0) == 0.0);
}

TEST_CASE("mutual reachability keeps dominating raw distances") {
  DistanceMatrix dm(2);
  dm.set(0, 1, 9.0);
  const CoreDistances cd({2.2, 1.2}, 1);
  CHECK(mutual_reachability(dm, cd)(0, 1) == 9.0);
}

TEST_CASE("mutual reachability of identical points is zero") {
  const PointSet ps = PointSet::from_rows({{1.0}, {1.0}, {1.0}});
  const DistanceMatrix dm = pairwise_distances(ps);
  const DistanceMatrix mrd = mutual_reachability(dm, core_distances(dm, 2));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(mrd(i, j) == 0.0);
  }
}

TEST_CASE("mutual reachability never shrinks distances") {
  testsupport::TestRng rng(11);
  const PointSet ps = testsupport::random_points(rng, 25);
  const DistanceMatrix dm = pairwise_distances(ps);
  const DistanceMatrix mrd = mutual_reachability(dm, core_distances(dm, 4));
  for (int i = 0; i < 25; ++i) {
    CHECK(mrd(i, i) == 0.0);
    for (int j = 0; j < 25; ++j) {
      CHECK(mrd(i, j) >= dm(i, j));
      CHECK(mrd(i, j) == mrd(j, i));
    }
  }
}

TEST_CASE("mutual reachability rejects mismatched sizes") {
  DistanceMatrix dm(3);
  const CoreDistances cd({1.0, 1.0}, 1);
  CHECK_THROWS_AS(mutual_reachability(dm, cd), std::invalid_argument);
}

TEST_CASE("dense matrix validation") {
  CHECK_THROWS_AS(DistanceMatrix::from_dense({0.0, 1.0, 2.0, 0.0}, 2),
                  std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(DistanceMatrix::from_dense({1.0, 1.0, 1.0, 0.0}, 2),
                  std::invalid_argument);  // nonzero diagonal
  CHECK_THROWS_AS(DistanceMatrix::from_dense({0.0, -1.0, -1.0, 0.0}, 2),
                  std::invalid_argument);  // negative
  CHECK_THROWS_AS(DistanceMatrix::from_dense({0.0, 1.0, 1.0}, 2),
                  std::invalid_argument);  // wrong size
  CHECK_NOTHROW(DistanceMatrix::from_dense({0.0, 1.0, 1.0, 0.0}, 2));
}
