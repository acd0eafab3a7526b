// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_POINT_CLOUD_HPP
#define WVOX_POINT_CLOUD_HPP

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wvox/error.hpp"

namespace wvox {

/// One LiDAR return in the sensor frame. Coordinates in meters,
/// intensity dimensionless in [0, 1].
struct Point {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
  float intensity = 0.0f;

  Point() = default;
  Point(float x_, float y_, float z_, float intensity_)
      : x(x_), y(y_), z(z_), intensity(intensity_) {}

  [[nodiscard]] Eigen::Vector3f position() const { return {x, y, z}; }
  [[nodiscard]] float range() const { return position().norm(); }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Per-point / per-voxel ground-truth class.
enum class NoiseLabel : std::uint8_t {
  NoNoise = 0,
  Noise = 1,
};

/// Rigid transform: rotate then translate.
struct Pose {
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();

  /// Throws unless the quaternion is unit-norm within 1e-6.
  void validate() const {
    if (std::abs(rotation.norm() - 1.0) > 1e-6)
      throw InvalidArgument("Pose: quaternion norm deviates from 1 by more than 1e-6");
  }

  [[nodiscard]] Pose inverse() const {
    Pose inv;
    inv.rotation = rotation.conjugate();
    inv.translation = -(inv.rotation * translation);
    return inv;
  }

  [[nodiscard]] Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }
};

/// An immutable-by-convention LiDAR sweep with optional noise labels.
struct PointCloud {
  std::vector<Point> points;
  std::vector<NoiseLabel> labels;  // empty, or one label per point
  std::string frame_id;
  std::string vehicle_id;
  double timestamp = 0.0;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool empty() const { return points.empty(); }
  [[nodiscard]] bool has_labels() const { return !labels.empty(); }

  void validate() const {
    if (has_labels() && labels.size() != points.size())
      throw InvalidArgument("PointCloud: label count does not match point count");
    if (timestamp < 0.0) throw InvalidArgument("PointCloud: negative timestamp");
    for (const Point& p : points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw InvalidArgument("PointCloud: non-finite coordinate");
      if (!(p.intensity >= 0.0f && p.intensity <= 1.0f))
        throw InvalidArgument("PointCloud: intensity outside [0, 1]");
    }
  }
};

/// Applies `pose` to every point: rotate, then translate. Intensities,
/// labels and metadata pass through unchanged.
inline PointCloud transform(const PointCloud& cloud, const Pose& pose) {
  pose.validate();
  PointCloud out = cloud;
  const Eigen::Matrix3d rot = pose.rotation.toRotationMatrix();
  for (Point& p : out.points) {
    Eigen::Vector3d q = rot * Eigen::Vector3d(p.x, p.y, p.z) + pose.translation;
    p.x = static_cast<float>(q.x());
    p.y = static_cast<float>(q.y());
    p.z = static_cast<float>(q.z());
  }
  return out;
}

}  // namespace wvox

#endif
