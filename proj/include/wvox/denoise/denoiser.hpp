// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_DENOISE_DENOISER_HPP
#define WVOX_DENOISE_DENOISER_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"
#include "wvox/rng.hpp"
#include "wvox/voxel/grid.hpp"
#include "wvox/voxel/voxelize.hpp"

namespace wvox::denoise {

/// Voxel-level binary noise classifier. Implementations must be
/// deterministic for fixed inputs and configuration and return one
/// prediction per voxel, in coordinate order.
class Denoiser {
public:
  virtual ~Denoiser() = default;
  [[nodiscard]] virtual std::vector<NoiseLabel> classify(const SparseVoxelGrid& grid,
                                                         const PointCloud& source) const = 0;
};

struct OracleConfig {
  double flip_noise = 0.0;     // P(noise voxel reported clean)
  double flip_no_noise = 0.0;  // P(clean voxel reported noise)
  std::uint64_t seed = 0;

  void validate() const {
    if (flip_noise < 0.0 || flip_noise > 1.0 || flip_no_noise < 0.0 || flip_no_noise > 1.0)
      throw InvalidArgument("OracleConfig: flip rates must lie in [0, 1]");
  }
};

/// Returns the ground-truth voxel labels, optionally corrupted by
/// per-class flip rates to emulate a classifier of a given accuracy.
/// The flip stream is keyed by the configured seed and the grid
/// content, so identical inputs always flip identically.
class OracleDenoiser final : public Denoiser {
public:
  explicit OracleDenoiser(OracleConfig cfg = {}) : cfg_(cfg) { cfg_.validate(); }

  [[nodiscard]] std::vector<NoiseLabel> classify(const SparseVoxelGrid& grid,
                                                 const PointCloud& /*source*/) const override {
    if (!grid.has_labels())
      throw InvalidArgument("OracleDenoiser: grid carries no ground-truth labels");
    std::vector<NoiseLabel> out = grid.labels;
    if (cfg_.flip_noise == 0.0 && cfg_.flip_no_noise == 0.0) return out;

    RngStream rng = RngStream(cfg_.seed).derive(coords_digest(grid));
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double u = rng.next_double();  // one draw per voxel, labels aside
      if (out[i] == NoiseLabel::Noise) {
        if (u < cfg_.flip_noise) out[i] = NoiseLabel::NoNoise;
      } else {
        if (u < cfg_.flip_no_noise) out[i] = NoiseLabel::Noise;
      }
    }
    return out;
  }

private:
  static std::uint64_t coords_digest(const SparseVoxelGrid& grid) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ grid.size();
    for (const VoxelCoord& c : grid.coords) {
      h ^= pack_coord(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  OracleConfig cfg_;
};

struct HeuristicConfig {
  double intensity_threshold = 0.1;
  int neighbor_radius = 1;  // Chebyshev radius in voxels; 1 = 26-neighborhood
  int min_neighbors = 2;

  void validate() const {
    if (intensity_threshold < 0.0 || intensity_threshold > 1.0)
      throw InvalidArgument("HeuristicConfig: intensity threshold must lie in [0, 1]");
    if (neighbor_radius < 1 || min_neighbors < 0)
      throw InvalidArgument("HeuristicConfig: radius must be >= 1 and min neighbors >= 0");
  }
};

/// Intensity-and-density rule of thumb: a voxel is noise iff its mean
/// point intensity falls below the threshold and its occupied
/// neighborhood is sparser than min_neighbors. Weather noise sits in
/// free space at low intensity; surfaces are bright and contiguous.
class HeuristicDenoiser final : public Denoiser {
public:
  explicit HeuristicDenoiser(HeuristicConfig cfg = {}) : cfg_(cfg) { cfg_.validate(); }

  [[nodiscard]] std::vector<NoiseLabel> classify(const SparseVoxelGrid& grid,
                                                 const PointCloud& source) const override {
    // Mean intensity per voxel, from the cloud the grid was built from.
    std::vector<std::uint64_t> keys;
    keys.reserve(grid.size());
    for (const VoxelCoord& c : grid.coords) keys.push_back(pack_coord(c));

    std::vector<double> intensity_sum(grid.size(), 0.0);
    std::vector<std::uint32_t> point_count(grid.size(), 0);
    for (const Point& p : source.points) {
      const auto c = voxel_of(p, grid.spec);
      if (!c) continue;  // out-of-extent points never reached the grid
      const auto it = std::lower_bound(keys.begin(), keys.end(), pack_coord(*c));
      if (it == keys.end() || *it != pack_coord(*c))
        throw InvalidArgument("HeuristicDenoiser: cloud point maps to a voxel not in the grid");
      const auto idx = static_cast<std::size_t>(it - keys.begin());
      intensity_sum[idx] += p.intensity;
      ++point_count[idx];
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (point_count[i] == 0)
        throw InvalidArgument("HeuristicDenoiser: grid voxel has no points in the source cloud");

    std::vector<NoiseLabel> out(grid.size(), NoiseLabel::NoNoise);
    const int r = cfg_.neighbor_radius;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double mean_intensity = intensity_sum[i] / point_count[i];
      if (mean_intensity >= cfg_.intensity_threshold) continue;
      if (occupied_neighbors(grid, keys, i, r) < cfg_.min_neighbors)
        out[i] = NoiseLabel::Noise;
    }
    return out;
  }

private:
  static int occupied_neighbors(const SparseVoxelGrid& grid,
                                const std::vector<std::uint64_t>& keys, std::size_t i, int r) {
    const VoxelCoord c = grid.coords[i];
    int found = 0;
    for (int dx = -r; dx <= r; ++dx) {
      const std::int64_t x = std::int64_t(c.ix) + dx;
      if (x < 0 || x >= std::int64_t(grid.spec.dims[0])) continue;
      for (int dy = -r; dy <= r; ++dy) {
        const std::int64_t y = std::int64_t(c.iy) + dy;
        if (y < 0 || y >= std::int64_t(grid.spec.dims[1])) continue;
        for (int dz = -r; dz <= r; ++dz) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const std::int64_t z = std::int64_t(c.iz) + dz;
          if (z < 0 || z >= std::int64_t(grid.spec.dims[2])) continue;
          const std::uint64_t key = pack_coord({std::uint32_t(x), std::uint32_t(y), std::uint32_t(z)});
          if (std::binary_search(keys.begin(), keys.end(), key)) ++found;
        }
      }
    }
    return found;
  }

  HeuristicConfig cfg_;
};

}  // namespace wvox::denoise

#endif
