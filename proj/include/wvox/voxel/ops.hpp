// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_VOXEL_OPS_HPP
#define WVOX_VOXEL_OPS_HPP

#include <algorithm>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/voxel/grid.hpp"

namespace wvox {

/// Scatter operation: fuses two feature-bearing grids over the same
/// spec. Voxels present in both take the element-wise maximum of their
/// feature vectors; voxels in exactly one grid carry their features
/// over. Output coords are the sorted union, so every voxel ends up
/// with the same channel count. Labels do not survive fusion: the fused
/// grid feeds downstream consumers, not ground truth.
inline SparseVoxelGrid scatter_fuse(const SparseVoxelGrid& a, const SparseVoxelGrid& b) {
  if (!(a.spec == b.spec)) throw InvalidArgument("scatter_fuse: grid specs differ");
  if (!a.has_features() || !b.has_features())
    throw InvalidArgument("scatter_fuse: both grids must carry features");
  if (a.feature_width != b.feature_width)
    throw InvalidArgument("scatter_fuse: feature widths differ");
  const std::size_t w = a.feature_width;

  SparseVoxelGrid out;
  out.spec = a.spec;
  out.feature_width = w;
  out.coords.reserve(a.size() + b.size());
  out.features.reserve((a.size() + b.size()) * w);

  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a.coords[i] < b.coords[j])) {
      out.coords.push_back(a.coords[i]);
      out.features.insert(out.features.end(), a.features.begin() + i * w,
                          a.features.begin() + (i + 1) * w);
      ++i;
    } else if (i == a.size() || b.coords[j] < a.coords[i]) {
      out.coords.push_back(b.coords[j]);
      out.features.insert(out.features.end(), b.features.begin() + j * w,
                          b.features.begin() + (j + 1) * w);
      ++j;
    } else {
      out.coords.push_back(a.coords[i]);
      for (std::size_t k = 0; k < w; ++k)
        out.features.push_back(std::max(a.features[i * w + k], b.features[j * w + k]));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Drops every voxel predicted as noise before the grid is shared.
/// Labels and features are filtered consistently; order is preserved.
inline SparseVoxelGrid apply_mask(const SparseVoxelGrid& grid,
                                  const std::vector<NoiseLabel>& predicted) {
  if (predicted.size() != grid.size())
    throw InvalidArgument("apply_mask: prediction count does not match voxel count");

  SparseVoxelGrid out;
  out.spec = grid.spec;
  out.feature_width = grid.feature_width;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (predicted[i] != NoiseLabel::NoNoise) continue;
    out.coords.push_back(grid.coords[i]);
    if (grid.has_labels()) out.labels.push_back(grid.labels[i]);
    if (grid.has_features())
      out.features.insert(out.features.end(), grid.features.begin() + i * grid.feature_width,
                          grid.features.begin() + (i + 1) * grid.feature_width);
  }
  return out;
}

}  // namespace wvox

#endif
