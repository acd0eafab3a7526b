// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_IO_GRID_JSON_HPP
#define WVOX_IO_GRID_JSON_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "wvox/error.hpp"
#include "wvox/voxel/grid.hpp"

namespace wvox::io {

/// Inspectable on-disk grid form used by the CLI pipeline; unlike the
/// SVGM wire format it keeps labels. Features are not persisted.
inline nlohmann::json grid_to_json(const SparseVoxelGrid& grid) {
  nlohmann::json j;
  j["spec"] = {{"origin", {grid.spec.origin[0], grid.spec.origin[1], grid.spec.origin[2]}},
               {"voxel_size",
                {grid.spec.voxel_size[0], grid.spec.voxel_size[1], grid.spec.voxel_size[2]}},
               {"dims", grid.spec.dims}};
  auto& coords = j["coords"];
  coords = nlohmann::json::array();
  for (const VoxelCoord& c : grid.coords) coords.push_back({c.ix, c.iy, c.iz});
  if (grid.has_labels()) {
    auto& labels = j["labels"];
    labels = nlohmann::json::array();
    for (NoiseLabel l : grid.labels) labels.push_back(static_cast<int>(l));
  }
  return j;
}

inline SparseVoxelGrid grid_from_json(const nlohmann::json& j) {
  SparseVoxelGrid grid;
  const auto& spec = j.at("spec");
  const auto& o = spec.at("origin");
  const auto& v = spec.at("voxel_size");
  const auto& d = spec.at("dims");
  if (!o.is_array() || o.size() != 3 || !v.is_array() || v.size() != 3 || !d.is_array() ||
      d.size() != 3)
    throw ParseError("grid json: spec origin/voxel_size/dims must be 3-element arrays");
  for (int a = 0; a < 3; ++a) {
    grid.spec.origin[a] = o[a].get<double>();
    grid.spec.voxel_size[a] = v[a].get<float>();
    grid.spec.dims[a] = d[a].get<std::uint32_t>();
  }
  for (const auto& c : j.at("coords")) {
    if (!c.is_array() || c.size() != 3) throw ParseError("grid json: coords must be [ix,iy,iz]");
    grid.coords.push_back(
        {c[0].get<std::uint32_t>(), c[1].get<std::uint32_t>(), c[2].get<std::uint32_t>()});
  }
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      const int value = l.get<int>();
      if (value != 0 && value != 1) throw ParseError("grid json: labels must be 0 or 1");
      grid.labels.push_back(static_cast<NoiseLabel>(value));
    }
  }
  grid.validate();
  return grid;
}

inline void write_grid_json(const SparseVoxelGrid& grid, const std::string& path) {
  std::ofstream fs(path, std::ios::trunc);
  if (!fs) throw IoError("cannot write " + path);
  fs << grid_to_json(grid).dump() << '\n';
}

inline SparseVoxelGrid read_grid_json(const std::string& path) {
  std::ifstream fs(path);
  if (!fs) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    fs >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return grid_from_json(j);
}

}  // namespace wvox::io

#endif
