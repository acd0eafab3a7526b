// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WEATHER_CORRIDOR_HPP
#define WVOX_WEATHER_CORRIDOR_HPP

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/rng.hpp"
#include "wvox/weather/geometry.hpp"

namespace wvox::weather {

/// A spherical weather particle (raindrop or snowflake).
struct Particle {
  Eigen::Vector3d center;  // meters, sensor frame
  double radius_m = 0.0;
};

/// Instantiates particles for one beam only, inside the cylindrical
/// corridor around the central ray, instead of filling the whole field
/// of view. For uniformly distributed particles the two are
/// distributionally equivalent, and the corridor keeps per-frame
/// particle counts tractable at Table-I densities.
///
/// Count ~ Poisson(density * cylinder volume); centers uniform in the
/// cylinder; radius = sampled diameter / 2. Per-particle draw order is
/// fixed: axial position, radial position, azimuth, diameter.
template <typename DiameterSamplerMm>
std::vector<Particle> populate_corridor(const Eigen::Vector3d& axis_unit, double path_length_m,
                                        double corridor_radius_m, double density_per_m3,
                                        DiameterSamplerMm&& sample_diameter_mm, RngStream& rng) {
  if (path_length_m < 0.0 || corridor_radius_m < 0.0 || density_per_m3 < 0.0)
    throw InvalidArgument("populate_corridor: arguments must be non-negative");

  const double volume =
      std::numbers::pi * corridor_radius_m * corridor_radius_m * path_length_m;
  const std::uint64_t count = rng.poisson(density_per_m3 * volume);
  std::vector<Particle> particles;
  particles.reserve(count);
  if (count == 0) return particles;

  const auto [u, v] = orthonormal_basis(axis_unit);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double z = rng.uniform(0.0, path_length_m);
    const double radial = corridor_radius_m * std::sqrt(rng.next_double());
    const double phi = 2.0 * std::numbers::pi * rng.next_double();
    const double diameter_mm = sample_diameter_mm(rng);
    Particle p;
    p.center = axis_unit * z + (u * std::cos(phi) + v * std::sin(phi)) * radial;
    p.radius_m = diameter_mm * 0.5e-3;
    particles.push_back(p);
  }
  return particles;
}

}  // namespace wvox::weather

#endif
