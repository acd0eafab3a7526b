// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WEATHER_GEOMETRY_HPP
#define WVOX_WEATHER_GEOMETRY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/weather/params.hpp"

namespace wvox::weather {

/// Deterministic right-handed basis (u, v) orthonormal to a unit axis.
inline std::pair<Eigen::Vector3d, Eigen::Vector3d> orthonormal_basis(const Eigen::Vector3d& axis) {
  const Eigen::Vector3d ref =
      std::abs(axis.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
  const Eigen::Vector3d u = axis.cross(ref).normalized();
  const Eigen::Vector3d v = axis.cross(u);
  return {u, v};
}

/// One ray of a discretized beam cone. All rays originate at the sensor
/// origin; `target` is the point where the ray pierces the beam
/// cross-section disk at the sampled range.
struct BeamRay {
  Eigen::Vector3d dir;     // unit
  Eigen::Vector3d target;  // on the cross-section disk
};

/// Discretizes a diverging beam into rays: the central ray plus rings
/// of rays that pierce the cross-section disk of radius
/// range * tan(divergence / 2) at the configured radius fractions, with
/// evenly spaced azimuths. The central ray is first; rings follow in
/// declaration order.
inline std::vector<BeamRay> make_beam_rays(const Eigen::Vector3d& direction, double range_m,
                                           const BeamModel& beam) {
  beam.validate();
  const double norm = direction.norm();
  if (norm < 1e-12) throw InvalidArgument("make_beam_rays: zero direction vector");
  if (std::abs(norm - 1.0) > 1e-6)
    throw InvalidArgument("make_beam_rays: direction must be unit length");
  if (!(range_m > 0.0)) throw InvalidArgument("make_beam_rays: range must be > 0");

  const Eigen::Vector3d d = direction / norm;
  std::vector<BeamRay> rays;
  rays.reserve(static_cast<std::size_t>(beam.rays_per_beam()));
  rays.push_back({d, d * range_m});

  const double disk_radius = range_m * std::tan(beam.divergence_rad / 2.0);
  const auto [u, v] = orthonormal_basis(d);
  const Eigen::Vector3d center = d * range_m;
  for (const RingSpec& ring : beam.rings) {
    const double rho = ring.radius_fraction * disk_radius;
    for (int k = 0; k < ring.ray_count; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / ring.ray_count;
      const Eigen::Vector3d target = center + (u * std::cos(phi) + v * std::sin(phi)) * rho;
      rays.push_back({target.normalized(), target});
    }
  }
  return rays;
}

/// Smallest non-negative ray parameter t with |origin + t*dir - center|
/// equal to radius, or nullopt when the ray misses the sphere.
inline std::optional<double> intersect_ray_sphere(const Eigen::Vector3d& origin,
                                                  const Eigen::Vector3d& dir_unit,
                                                  const Eigen::Vector3d& center, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("intersect_ray_sphere: radius must be > 0");
  const Eigen::Vector3d oc = center - origin;
  const double b = oc.dot(dir_unit);
  const double disc = b * b - (oc.squaredNorm() - radius * radius);
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  const double t_near = b - s;
  if (t_near >= 0.0) return t_near;
  const double t_far = b + s;
  if (t_far >= 0.0) return t_far;  // origin inside the sphere
  return std::nullopt;
}

}  // namespace wvox::weather

#endif
