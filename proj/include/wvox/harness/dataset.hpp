// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_HARNESS_DATASET_HPP
#define WVOX_HARNESS_DATASET_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wvox/error.hpp"
#include "wvox/io/pcd_io.hpp"
#include "wvox/io/pose_io.hpp"
#include "wvox/io/wvpc_io.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox::harness {

// Dataset layout on disk:
//   root/<scenario_id>/poses.json
//   root/<scenario_id>/<frame_id>/<vehicle_id>.{wvpc|pcd}
// poses.json: {"cooperative": [ids...]?, "frames": {frame_id: [pose...]}}
// with pose objects {"vehicle_id", "translation", "rotation"}.

struct VehicleFrame {
  std::string vehicle_id;
  std::filesystem::path cloud_path;
  Pose pose;
};

struct FrameEntry {
  std::string frame_id;
  std::vector<VehicleFrame> vehicles;  // sorted by vehicle id
};

struct Scenario {
  std::string scenario_id;
  std::vector<FrameEntry> frames;        // sorted by frame id
  std::vector<std::string> cooperative;  // sorted vehicle ids

  [[nodiscard]] std::vector<std::string> vehicle_ids(const FrameEntry& frame) const {
    std::vector<std::string> ids;
    ids.reserve(frame.vehicles.size());
    for (const auto& v : frame.vehicles) ids.push_back(v.vehicle_id);
    return ids;
  }
};

/// Loads a cloud by extension: .wvpc binary or .pcd ASCII.
inline PointCloud load_cloud(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".wvpc") return io::read_wvpc(path.string());
  if (ext == ".pcd") return io::read_pcd(path.string());
  throw InvalidArgument("load_cloud: unsupported extension '" + ext + "' for " + path.string());
}

inline Scenario load_scenario(const std::filesystem::path& dir) {
  Scenario scenario;
  scenario.scenario_id = dir.filename().string();

  const std::filesystem::path poses_path = dir / "poses.json";
  std::ifstream fs(poses_path);
  if (!fs) throw IoError("missing poses file " + poses_path.string());
  nlohmann::json j;
  try {
    fs >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(poses_path.string() + ": " + e.what());
  }
  if (!j.contains("frames") || !j.at("frames").is_object())
    throw ParseError(poses_path.string() + ": missing 'frames' object");

  std::vector<std::string> all_vehicles;
  for (const auto& [frame_id, poses] : j.at("frames").items()) {
    FrameEntry frame;
    frame.frame_id = frame_id;
    if (!poses.is_array())
      throw ParseError(poses_path.string() + ": frame '" + frame_id + "' must be a pose array");
    for (const auto& pj : poses) {
      auto [vehicle_id, pose] = io::parse_pose(pj);
      VehicleFrame vf;
      vf.vehicle_id = vehicle_id;
      vf.pose = pose;
      for (const char* ext : {".wvpc", ".pcd"}) {
        const auto candidate = dir / frame_id / (vehicle_id + ext);
        if (std::filesystem::exists(candidate)) {
          vf.cloud_path = candidate;
          break;
        }
      }
      if (vf.cloud_path.empty())
        throw IoError("missing cloud file for vehicle '" + vehicle_id + "' under " +
                      (dir / frame_id).string());
      frame.vehicles.push_back(std::move(vf));
      if (std::find(all_vehicles.begin(), all_vehicles.end(), vehicle_id) == all_vehicles.end())
        all_vehicles.push_back(vehicle_id);
    }
    std::sort(frame.vehicles.begin(), frame.vehicles.end(),
              [](const VehicleFrame& a, const VehicleFrame& b) {
                return a.vehicle_id < b.vehicle_id;
              });
    scenario.frames.push_back(std::move(frame));
  }
  std::sort(scenario.frames.begin(), scenario.frames.end(),
            [](const FrameEntry& a, const FrameEntry& b) { return a.frame_id < b.frame_id; });

  if (j.contains("cooperative")) {
    for (const auto& v : j.at("cooperative")) scenario.cooperative.push_back(v.get<std::string>());
  } else {
    scenario.cooperative = all_vehicles;
  }
  std::sort(scenario.cooperative.begin(), scenario.cooperative.end());
  if (scenario.cooperative.size() < 2)
    throw InvalidArgument("scenario " + scenario.scenario_id +
                          ": needs at least 2 cooperative vehicles");
  return scenario;
}

/// Scans all scenario directories under `root`, sorted by id.
inline std::vector<Scenario> scan_dataset(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root))
    throw IoError("dataset root " + root.string() + " is not a directory");
  std::vector<std::filesystem::path> dirs;
  for (const auto& entry : std::filesystem::directory_iterator(root))
    if (entry.is_directory()) dirs.push_back(entry.path());
  std::sort(dirs.begin(), dirs.end());
  if (dirs.empty()) throw IoError("dataset root " + root.string() + " has no scenarios");
  std::vector<Scenario> scenarios;
  scenarios.reserve(dirs.size());
  for (const auto& d : dirs) scenarios.push_back(load_scenario(d));
  return scenarios;
}

}  // namespace wvox::harness

#endif
