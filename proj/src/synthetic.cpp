#include "hdbscan/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdbscan {

namespace {

// std::uniform_real_distribution and std::normal_distribution are
// implementation-defined, so the draws are hand-rolled on top of the
// mt19937_64 stream to keep output identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform01() * (hi - lo + 1));
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // Box-Muller; u1 shifted into (0, 1] so the log stays finite.
    const double u1 =
        (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

struct Blob {
  double cx;
  double cy;
  double std;
};

}  // namespace

SyntheticParams params_for(SyntheticKind kind) {
  SyntheticParams p;
  if (kind == SyntheticKind::dense_core_sparse_satellites) {
    p.core_std = 1.0;
    p.core_clump_points = 15;
    p.core_clump_std = 0.1;
    p.satellite_std = 0.15;
    p.ring_radius_min = 50.0;
    p.ring_radius_max = 90.0;
    p.noise_fraction = 0.08;
    p.field_half_width = 110.0;
  } else {
    p.core_std = 2.0;
    p.satellite_std = 0.5;
    p.ring_radius_min = 60.0;
    p.ring_radius_max = 100.0;
    p.noise_fraction = 0.10;
    p.field_half_width = 120.0;
  }
  return p;
}

SyntheticDataset generate_synthetic(SyntheticKind kind, std::uint64_t seed, int n) {
  if (n < 50) {
    throw std::invalid_argument("generate_synthetic requires n >= 50");
  }
  const SyntheticParams p = params_for(kind);
  const int n_noise = static_cast<int>(std::lround(p.noise_fraction * n));
  const int core_floor = (n * 45 + 99) / 100;  // ceil(0.45 n) reserved for the core
  const int budget = n - n_noise - core_floor;  // points available to satellites

  // Layout rejection loop: each attempt reseeds deterministically, so a
  // rejected layout never perturbs the accepted one's stream.
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * attempt);

    int sat_count = rng.uniform_int(p.min_satellites, p.max_satellites);
    sat_count = std::min(sat_count, budget / p.min_satellite_size);
    sat_count = std::max(sat_count, p.min_satellites);

    std::vector<int> sat_sizes(sat_count);
    int remaining = budget;
    for (int i = 0; i < sat_count; ++i) {
      const int reserve = (sat_count - i - 1) * p.min_satellite_size;
      const int hi = std::min(p.max_satellite_size, remaining - reserve);
      sat_sizes[i] = rng.uniform_int(p.min_satellite_size, std::max(p.min_satellite_size, hi));
      remaining -= sat_sizes[i];
    }
    const int n_core = n - n_noise - (budget - remaining);

    std::vector<Blob> blobs;
    blobs.push_back({0.0, 0.0, p.core_std});
    for (int i = 0; i < sat_count; ++i) {
      const double angle =
          2.0 * std::numbers::pi * (i + rng.uniform(-0.25, 0.25)) / sat_count;
      const double radius = rng.uniform(p.ring_radius_min, p.ring_radius_max);
      blobs.push_back({radius * std::cos(angle), radius * std::sin(angle),
                       p.satellite_std});
    }

    double max_std = 0.0;
    for (const Blob& b : blobs) max_std = std::max(max_std, b.std);
    bool separated = true;
    for (std::size_t i = 0; i < blobs.size() && separated; ++i) {
      for (std::size_t j = i + 1; j < blobs.size(); ++j) {
        const double dist = std::hypot(blobs[i].cx - blobs[j].cx,
                                       blobs[i].cy - blobs[j].cy);
        if (dist < p.min_separation_factor * max_std) {
          separated = false;
          break;
        }
      }
    }
    if (!separated) continue;

    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    Labeling truth;
    truth.reserve(n);

    if (p.core_clump_points > 0) {
      // Clumped core: tight sub-clumps whose centers follow the core
      // Gaussian, giving the dominant blob genuine fine structure.
      int produced = 0;
      while (produced < n_core) {
        const double ccx = p.core_std * rng.normal();
        const double ccy = p.core_std * rng.normal();
        const int take = std::min(p.core_clump_points, n_core - produced);
        for (int k = 0; k < take; ++k) {
          rows.push_back({ccx + p.core_clump_std * rng.normal(),
                          ccy + p.core_clump_std * rng.normal()});
          truth.push_back(0);
        }
        produced += take;
      }
    } else {
      for (int k = 0; k < n_core; ++k) {
        rows.push_back({p.core_std * rng.normal(), p.core_std * rng.normal()});
        truth.push_back(0);
      }
    }
    for (int i = 0; i < sat_count; ++i) {
      const Blob& b = blobs[i + 1];
      for (int k = 0; k < sat_sizes[i]; ++k) {
        rows.push_back({b.cx + b.std * rng.normal(), b.cy + b.std * rng.normal()});
        truth.push_back(1 + i);
      }
    }
    for (int k = 0; k < n_noise; ++k) {
      rows.push_back({rng.uniform(-p.field_half_width, p.field_half_width),
                      rng.uniform(-p.field_half_width, p.field_half_width)});
      truth.push_back(kNoiseLabel);
    }

    return SyntheticDataset{PointSet::from_rows(rows, Metric::euclidean),
                            std::move(truth)};
  }
}

}  // namespace hdbscan
