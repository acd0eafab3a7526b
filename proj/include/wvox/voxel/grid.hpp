// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_VOXEL_GRID_HPP
#define WVOX_VOXEL_GRID_HPP

#include <Eigen/Dense>
#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox {

/// Fixed regular grid over the evaluation extent. Defaults follow the
/// 5 x 5 x 10 cm voxels over 280 x 80 x 4 m around the ego vehicle.
struct GridSpec {
  Eigen::Vector3d origin{-140.0, -40.0, -3.0};   // minimum corner, meters
  Eigen::Vector3f voxel_size{0.05f, 0.05f, 0.1f};
  std::array<std::uint32_t, 3> dims{5600, 1600, 40};

  void validate() const {
    for (int a = 0; a < 3; ++a) {
      if (!(voxel_size[a] > 0.0f)) throw InvalidArgument("GridSpec: voxel size must be > 0");
      if (dims[a] < 1) throw InvalidArgument("GridSpec: dims must be >= 1");
      if (dims[a] >= (1u << 21)) throw InvalidArgument("GridSpec: dims must be < 2^21");
    }
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.origin == b.origin && a.voxel_size == b.voxel_size && a.dims == b.dims;
  }
};

/// Integer cell address within a GridSpec.
struct VoxelCoord {
  std::uint32_t ix = 0;
  std::uint32_t iy = 0;
  std::uint32_t iz = 0;

  friend auto operator<=>(const VoxelCoord&, const VoxelCoord&) = default;
};

/// 21 bits per axis, lexicographic order preserved under u64 compare.
inline std::uint64_t pack_coord(const VoxelCoord& c) {
  return (std::uint64_t(c.ix) << 42) | (std::uint64_t(c.iy) << 21) | std::uint64_t(c.iz);
}

inline VoxelCoord unpack_coord(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> 42), static_cast<std::uint32_t>((key >> 21) & 0x1fffff),
          static_cast<std::uint32_t>(key & 0x1fffff)};
}

/// Occupied cells of a GridSpec, coordinate-sorted and duplicate-free,
/// with optional per-voxel labels and fixed-width feature vectors.
struct SparseVoxelGrid {
  GridSpec spec;
  std::vector<VoxelCoord> coords;   // strictly ascending (ix, iy, iz)
  std::vector<NoiseLabel> labels;   // empty or one per voxel
  std::vector<float> features;      // empty or feature_width per voxel, row-major
  std::size_t feature_width = 0;

  [[nodiscard]] std::size_t size() const { return coords.size(); }
  [[nodiscard]] bool empty() const { return coords.empty(); }
  [[nodiscard]] bool has_labels() const { return !labels.empty(); }
  [[nodiscard]] bool has_features() const { return feature_width > 0; }

  void validate() const {
    spec.validate();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const VoxelCoord& c = coords[i];
      if (c.ix >= spec.dims[0] || c.iy >= spec.dims[1] || c.iz >= spec.dims[2])
        throw InvalidArgument("SparseVoxelGrid: coordinate outside grid dims");
      if (i > 0 && !(coords[i - 1] < c))
        throw InvalidArgument("SparseVoxelGrid: coords must be strictly sorted and unique");
    }
    if (has_labels() && labels.size() != coords.size())
      throw InvalidArgument("SparseVoxelGrid: label count does not match voxel count");
    if (has_features()) {
      if (features.size() != feature_width * coords.size())
        throw InvalidArgument("SparseVoxelGrid: feature buffer does not match width * count");
    } else if (!features.empty()) {
      throw InvalidArgument("SparseVoxelGrid: features present but feature_width is 0");
    }
  }
};

}  // namespace wvox

#endif
