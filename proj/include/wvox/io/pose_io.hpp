// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_IO_POSE_IO_HPP
#define WVOX_IO_POSE_IO_HPP

#include <string>
#include <utility>

#include <json.hpp>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox::io {

/// Pose JSON object: {"vehicle_id": ..., "translation": [x,y,z],
/// "rotation": [w,x,y,z]} with a unit quaternion.
inline std::pair<std::string, Pose> parse_pose(const nlohmann::json& j) {
  if (!j.contains("vehicle_id") || !j.contains("translation") || !j.contains("rotation"))
    throw ParseError("pose object requires vehicle_id, translation, rotation");
  const auto& t = j.at("translation");
  const auto& r = j.at("rotation");
  if (!t.is_array() || t.size() != 3) throw ParseError("pose translation must be [x,y,z]");
  if (!r.is_array() || r.size() != 4) throw ParseError("pose rotation must be [w,x,y,z]");
  Pose pose;
  pose.translation = Eigen::Vector3d(t[0].get<double>(), t[1].get<double>(), t[2].get<double>());
  pose.rotation = Eigen::Quaterniond(r[0].get<double>(), r[1].get<double>(), r[2].get<double>(),
                                     r[3].get<double>());
  pose.validate();
  return {j.at("vehicle_id").get<std::string>(), pose};
}

inline nlohmann::json pose_to_json(const std::string& vehicle_id, const Pose& pose) {
  nlohmann::json j;
  j["vehicle_id"] = vehicle_id;
  j["translation"] = {pose.translation.x(), pose.translation.y(), pose.translation.z()};
  j["rotation"] = {pose.rotation.w(), pose.rotation.x(), pose.rotation.y(), pose.rotation.z()};
  return j;
}

}  // namespace wvox::io

#endif
