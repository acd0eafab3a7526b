// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WEATHER_FOG_SIM_HPP
#define WVOX_WEATHER_FOG_SIM_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"
#include "wvox/rng.hpp"
#include "wvox/weather/params.hpp"
#include "wvox/weather/particle_sim.hpp"

namespace wvox::weather {

/// Probabilistic fog model for evenly dense fog: no ray tracing, one
/// two-way transmittance factor T = exp(-2 * alpha * range) per point
/// with alpha from the Koschmieder relation.
///
/// A point whose attenuated intensity still reaches the detection
/// threshold survives (attenuation within the sensor quantization is
/// not applied). Otherwise it either back-scatters into a false return
/// on its own bearing, at a truncated-exponential range, or vanishes.
/// Output order matches the particle filter: survivors in input order,
/// then relocated points in input order.
inline PointCloud simulate_fog(const PointCloud& cloud, const FogParams& params,
                               const FogConfig& cfg, const RngStream& stream) {
  detail::require_clear_input(cloud, "simulate_fog");
  params.validate();
  cfg.validate();
  const double alpha = fog_extinction(params.viewing_distance_m);

  PointCloud survivors;
  survivors.frame_id = cloud.frame_id;
  survivors.vehicle_id = cloud.vehicle_id;
  survivors.timestamp = cloud.timestamp;
  survivors.points.reserve(cloud.size());
  survivors.labels.reserve(cloud.size());
  std::vector<Point> relocated;

  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point& pt = cloud.points[i];
    RngStream rng = stream.derive(static_cast<std::uint64_t>(i));

    const Eigen::Vector3d pos(pt.x, pt.y, pt.z);
    const double range = pos.norm();
    if (range == 0.0) {
      survivors.points.push_back(pt);
      survivors.labels.push_back(NoiseLabel::NoNoise);
      continue;
    }

    const double transmit = std::exp(-2.0 * alpha * range);
    if (pt.intensity * transmit >= cfg.detect_threshold) {
      Point out = pt;
      if (1.0 - transmit > cfg.negligible_attenuation)
        out.intensity = static_cast<float>(pt.intensity * transmit);
      survivors.points.push_back(out);
      survivors.labels.push_back(NoiseLabel::NoNoise);
      continue;
    }

    if (rng.next_double() < cfg.scatter_prob) {
      const double hi = std::max(cfg.min_range_m, std::min(range, params.viewing_distance_m));
      const double false_range = rng.truncated_exponential(1.0 / cfg.scatter_mean_range_m,
                                                           cfg.min_range_m, hi);
      const Eigen::Vector3d c = pos * (false_range / range);
      relocated.emplace_back(static_cast<float>(c.x()), static_cast<float>(c.y()),
                             static_cast<float>(c.z()),
                             static_cast<float>(rng.uniform(cfg.noise_intensity_range[0],
                                                            cfg.noise_intensity_range[1])));
    }
    // else: the return is fully attenuated and deleted
  }

  for (const Point& p : relocated) {
    survivors.points.push_back(p);
    survivors.labels.push_back(NoiseLabel::Noise);
  }
  return survivors;
}

}  // namespace wvox::weather

#endif
