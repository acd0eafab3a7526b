// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_VOXEL_VOXELIZE_HPP
#define WVOX_VOXEL_VOXELIZE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "wvox/point_cloud.hpp"
#include "wvox/voxel/grid.hpp"

namespace wvox {

/// Cell index of a point, or nullopt when it falls outside the extent.
inline std::optional<VoxelCoord> voxel_of(const Point& p, const GridSpec& spec) {
  std::int64_t idx[3];
  const double coords[3] = {p.x, p.y, p.z};
  for (int a = 0; a < 3; ++a) {
    const double rel = (coords[a] - spec.origin[a]) / static_cast<double>(spec.voxel_size[a]);
    const double cell = std::floor(rel);
    if (cell < 0.0 || cell >= static_cast<double>(spec.dims[a])) return std::nullopt;
    idx[a] = static_cast<std::int64_t>(cell);
  }
  return VoxelCoord{static_cast<std::uint32_t>(idx[0]), static_cast<std::uint32_t>(idx[1]),
                    static_cast<std::uint32_t>(idx[2])};
}

/// Discretizes a cloud into the occupied cells of `spec`. Out-of-extent
/// points are skipped. If the cloud is labeled, each voxel takes the
/// majority label of its points; ties resolve to NoNoise, since a tied
/// voxel still holds real returns.
inline SparseVoxelGrid voxelize(const PointCloud& cloud, const GridSpec& spec) {
  spec.validate();
  const bool labeled = cloud.has_labels();

  // (packed coord, label) pairs; sort once, then reduce runs.
  std::vector<std::pair<std::uint64_t, std::uint8_t>> cells;
  cells.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto c = voxel_of(cloud.points[i], spec);
    if (!c) continue;
    const std::uint8_t lab = labeled ? static_cast<std::uint8_t>(cloud.labels[i]) : 0;
    cells.emplace_back(pack_coord(*c), lab);
  }
  std::sort(cells.begin(), cells.end());

  SparseVoxelGrid grid;
  grid.spec = spec;
  std::size_t i = 0;
  while (i < cells.size()) {
    const std::uint64_t key = cells[i].first;
    std::size_t noise = 0, total = 0;
    for (; i < cells.size() && cells[i].first == key; ++i) {
      noise += cells[i].second;
      ++total;
    }
    grid.coords.push_back(unpack_coord(key));
    if (labeled)
      grid.labels.push_back(noise > total - noise ? NoiseLabel::Noise : NoiseLabel::NoNoise);
  }
  return grid;
}

/// Center point of every voxel: origin + (coord + 0.5) * voxel_size.
/// Returns a flat width-3 feature buffer in coordinate order.
inline std::vector<float> center_features(const SparseVoxelGrid& grid) {
  std::vector<float> features;
  features.reserve(grid.size() * 3);
  for (const VoxelCoord& c : grid.coords) {
    const std::uint32_t idx[3] = {c.ix, c.iy, c.iz};
    for (int a = 0; a < 3; ++a) {
      const double center = grid.spec.origin[a] +
                            (static_cast<double>(idx[a]) + 0.5) *
                                static_cast<double>(grid.spec.voxel_size[a]);
      features.push_back(static_cast<float>(center));
    }
  }
  return features;
}

/// Attaches center-point features (width 3) to a copy of the grid.
inline SparseVoxelGrid with_center_features(SparseVoxelGrid grid) {
  grid.features = center_features(grid);
  grid.feature_width = 3;
  return grid;
}

}  // namespace wvox

#endif
