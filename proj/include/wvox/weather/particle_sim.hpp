// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WEATHER_PARTICLE_SIM_HPP
#define WVOX_WEATHER_PARTICLE_SIM_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"
#include "wvox/rng.hpp"
#include "wvox/weather/corridor.hpp"
#include "wvox/weather/geometry.hpp"
#include "wvox/weather/params.hpp"
#include "wvox/weather/size_dist.hpp"

namespace wvox::weather {

/// Thresholds shared by the rain and snow particle filters.
struct ParticleThresholds {
  double theta_mod = 0.15;
  double theta_scatter = 0.8;
  std::array<double, 2> relocated_intensity_range = {0.0, 0.1};
  double max_particle_radius_m = 3.0e-3;  // pads the corridor radius
};

namespace detail {

inline void require_clear_input(const PointCloud& cloud, const char* op) {
  if (!cloud.has_labels()) return;
  for (NoiseLabel l : cloud.labels)
    if (l == NoiseLabel::Noise)
      throw InvalidArgument(std::string(op) + ": input cloud already carries noise labels");
}

}  // namespace detail

/// Ray-traced particle noise filter shared by the rain and snow models.
///
/// Per point: discretize the beam into rays, instantiate particles in
/// the beam corridor, and compute the hit ratio (fraction of rays
/// intersecting at least one particle). Points at or below the
/// modification threshold survive with intensity scaled by
/// (1 - hit ratio). Above it, the particle intercepting the largest
/// share of the hitting rays either back-scatters strongly enough to
/// produce a false return at its center (share > theta_scatter), or the
/// point is dropped entirely.
///
/// Output order: surviving points in input order, then relocated points
/// in input order. Every output point is labeled. The per-beam RNG
/// stream is derived from `stream` by point index.
template <typename DiameterSamplerMm>
PointCloud simulate_with_sampler(const PointCloud& cloud, double particle_density_m3,
                                 const BeamModel& beam, const ParticleThresholds& thresholds,
                                 DiameterSamplerMm&& sample_diameter_mm, const RngStream& stream) {
  detail::require_clear_input(cloud, "simulate_with_sampler");
  if (particle_density_m3 < 0.0)
    throw InvalidArgument("simulate_with_sampler: particle density must be >= 0");
  beam.validate();

  const int n_rays = beam.rays_per_beam();
  const double half_div_tan = std::tan(beam.divergence_rad / 2.0);

  PointCloud survivors;
  survivors.frame_id = cloud.frame_id;
  survivors.vehicle_id = cloud.vehicle_id;
  survivors.timestamp = cloud.timestamp;
  survivors.points.reserve(cloud.size());
  survivors.labels.reserve(cloud.size());
  std::vector<Point> relocated;

  std::vector<std::uint32_t> particle_hits;
  std::vector<std::uint8_t> ray_hit;

  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point& pt = cloud.points[i];
    RngStream rng = stream.derive(static_cast<std::uint64_t>(i));

    const Eigen::Vector3d pos(pt.x, pt.y, pt.z);
    const double range = pos.norm();
    if (range == 0.0) {  // degenerate return at the sensor origin
      survivors.points.push_back(pt);
      survivors.labels.push_back(NoiseLabel::NoNoise);
      continue;
    }
    const Eigen::Vector3d dir = pos / range;

    const double corridor_radius = range * half_div_tan + thresholds.max_particle_radius_m;
    const std::vector<Particle> particles = populate_corridor(
        dir, range, corridor_radius, particle_density_m3, sample_diameter_mm, rng);

    double hit_ratio = 0.0;
    std::uint32_t hit_rays = 0;
    if (!particles.empty()) {
      const std::vector<BeamRay> rays = make_beam_rays(dir, range, beam);
      particle_hits.assign(particles.size(), 0);
      ray_hit.assign(rays.size(), 0);
      for (std::size_t j = 0; j < particles.size(); ++j) {
        const Particle& drop = particles[j];
        const double c2_minus_r2 =
            drop.center.squaredNorm() - drop.radius_m * drop.radius_m;
        for (std::size_t k = 0; k < rays.size(); ++k) {
          const double b = rays[k].dir.dot(drop.center);
          const double disc = b * b - c2_minus_r2;
          if (disc < 0.0) continue;
          if (b + std::sqrt(disc) < 0.0) continue;  // sphere entirely behind the origin
          ++particle_hits[j];
          ray_hit[k] = 1;
        }
      }
      for (std::uint8_t h : ray_hit) hit_rays += h;
      hit_ratio = static_cast<double>(hit_rays) / static_cast<double>(n_rays);
    }

    if (hit_ratio <= thresholds.theta_mod) {
      Point out = pt;
      out.intensity = static_cast<float>(pt.intensity * (1.0 - hit_ratio));
      survivors.points.push_back(out);
      survivors.labels.push_back(NoiseLabel::NoNoise);
      continue;
    }

    std::size_t best = 0;
    for (std::size_t j = 1; j < particles.size(); ++j)
      if (particle_hits[j] > particle_hits[best]) best = j;
    const double dominant_share =
        static_cast<double>(particle_hits[best]) / static_cast<double>(hit_rays);
    if (dominant_share > thresholds.theta_scatter) {
      const Eigen::Vector3d c = particles[best].center;
      Point out(static_cast<float>(c.x()), static_cast<float>(c.y()),
                static_cast<float>(c.z()),
                static_cast<float>(rng.uniform(thresholds.relocated_intensity_range[0],
                                               thresholds.relocated_intensity_range[1])));
      relocated.push_back(out);
    }
    // else: the point is deleted
  }

  for (const Point& p : relocated) {
    survivors.points.push_back(p);
    survivors.labels.push_back(NoiseLabel::Noise);
  }
  return survivors;
}

/// Rain augmentation: Feingold-Levin drop sizes through the shared
/// particle filter.
inline PointCloud simulate_rain(const PointCloud& cloud, const RainParams& params,
                                const BeamModel& beam, const RainConfig& cfg,
                                const RngStream& stream) {
  params.validate();
  cfg.validate();
  ParticleThresholds thresholds{cfg.theta_mod, cfg.theta_scatter, cfg.relocated_intensity_range,
                                cfg.max_diameter_mm * 0.5e-3};
  auto sampler = [&params, &cfg](RngStream& rng) {
    return sample_raindrop_diameter(params, rng, cfg);
  };
  return simulate_with_sampler(cloud, params.drop_density_m3, beam, thresholds, sampler, stream);
}

/// Snow augmentation: scaled Gunn-Marshall/Sekhon-Srivastava flake
/// sizes through the shared particle filter.
inline PointCloud simulate_snow(const PointCloud& cloud, const SnowParams& params,
                                const BeamModel& beam, const SnowConfig& cfg,
                                const RngStream& stream) {
  params.validate();
  cfg.validate();
  ParticleThresholds thresholds{cfg.theta_mod, cfg.theta_scatter, cfg.relocated_intensity_range,
                                cfg.max_diameter_mm * params.scale * 0.5e-3};
  auto sampler = [&params, &cfg](RngStream& rng) {
    return sample_snowflake_diameter(params, rng, cfg);
  };
  return simulate_with_sampler(cloud, params.flake_density_m3, beam, thresholds, sampler, stream);
}

}  // namespace wvox::weather

#endif
