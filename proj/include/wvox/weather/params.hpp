// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WEATHER_PARAMS_HPP
#define WVOX_WEATHER_PARAMS_HPP

#include <array>
#include <numeric>
#include <vector>

#include "wvox/error.hpp"

namespace wvox::weather {

struct RainParams {
  double rate_mm_h = 0.0;        // precipitation rate
  double drop_density_m3 = 0.0;  // raindrops per cubic meter

  void validate() const {
    if (rate_mm_h < 0.0 || drop_density_m3 < 0.0)
      throw InvalidArgument("RainParams: rate and density must be >= 0");
  }
};

struct SnowParams {
  double rate_mm_h = 0.0;         // melted-water equivalent rate
  double flake_density_m3 = 0.0;  // snowflakes per cubic meter
  double scale = 1.0;             // molten -> flake diameter factor, in [1, 5]

  void validate() const {
    if (rate_mm_h < 0.0 || flake_density_m3 < 0.0)
      throw InvalidArgument("SnowParams: rate and density must be >= 0");
    if (scale < 1.0 || scale > 5.0)
      throw InvalidArgument("SnowParams: scale must lie in [1, 5]");
  }
};

struct FogParams {
  double viewing_distance_m = 0.0;  // maximum viewing distance

  void validate() const {
    if (!(viewing_distance_m > 0.0))
      throw InvalidArgument("FogParams: viewing distance must be > 0");
  }
};

/// One ring of rays within the divergence cone.
struct RingSpec {
  double radius_fraction = 1.0;  // of the cross-section disk radius, in (0, 1]
  int ray_count = 0;
};

/// Discretized-cone model of one diverging LiDAR pulse: a central ray
/// plus rings of rays spread evenly over the beam cross section.
struct BeamModel {
  double divergence_rad = 3.0e-3;  // full opening angle
  std::vector<RingSpec> rings = {{0.5, 6}, {1.0, 12}};

  [[nodiscard]] int rays_per_beam() const {
    return std::accumulate(rings.begin(), rings.end(), 1,
                           [](int n, const RingSpec& r) { return n + r.ray_count; });
  }

  void validate() const {
    if (!(divergence_rad > 0.0))
      throw InvalidArgument("BeamModel: divergence must be > 0");
    for (const RingSpec& r : rings) {
      if (!(r.radius_fraction > 0.0 && r.radius_fraction <= 1.0))
        throw InvalidArgument("BeamModel: ring radius fraction must lie in (0, 1]");
      if (r.ray_count < 1) throw InvalidArgument("BeamModel: ring ray count must be >= 1");
    }
  }
};

/// Model constants for the rain particle filter. The Feingold-Levin
/// lognormal constants are overridable here; the defaults are the
/// rate-parametrized fit D_g = 0.72 * rate^0.23 mm, sigma_g = 1.43.
struct RainConfig {
  double theta_mod = 0.15;      // hit-ratio threshold for modifying a point
  double theta_scatter = 0.8;   // dominant-drop back-scatter threshold
  double max_diameter_mm = 6.0; // maximum stable raindrop diameter
  std::array<double, 2> relocated_intensity_range = {0.0, 0.1};
  double dg_coeff_mm = 0.72;
  double dg_rate_exp = 0.23;
  double sigma_g = 1.43;

  void validate() const {
    if (theta_mod < 0.0 || theta_mod > 1.0 || theta_scatter < 0.0 || theta_scatter > 1.0)
      throw InvalidArgument("RainConfig: thresholds must lie in [0, 1]");
    if (relocated_intensity_range[0] > relocated_intensity_range[1] ||
        relocated_intensity_range[0] < 0.0 || relocated_intensity_range[1] > 1.0)
      throw InvalidArgument("RainConfig: relocated intensity range must be [lo, hi] within [0, 1]");
    if (!(max_diameter_mm > 0.0)) throw InvalidArgument("RainConfig: max diameter must be > 0");
    if (!(sigma_g > 1.0)) throw InvalidArgument("RainConfig: sigma_g must be > 1");
  }
};

/// Snow analogue of RainConfig. The Gunn-Marshall slope as optimized by
/// Sekhon-Srivastava, Lambda = 2.29 * rate^-0.45 per mm of molten
/// diameter, is overridable; the diameter cap applies to the molten
/// diameter, before the flake scaling factor.
struct SnowConfig {
  double theta_mod = 0.10;
  double theta_scatter = 0.7;
  double max_diameter_mm = 10.0;  // molten diameter cap, pre-scaling
  std::array<double, 2> relocated_intensity_range = {0.0, 0.1};
  double lambda_coeff = 2.29;
  double lambda_rate_exp = -0.45;

  void validate() const {
    if (theta_mod < 0.0 || theta_mod > 1.0 || theta_scatter < 0.0 || theta_scatter > 1.0)
      throw InvalidArgument("SnowConfig: thresholds must lie in [0, 1]");
    if (relocated_intensity_range[0] > relocated_intensity_range[1] ||
        relocated_intensity_range[0] < 0.0 || relocated_intensity_range[1] > 1.0)
      throw InvalidArgument("SnowConfig: relocated intensity range must be [lo, hi] within [0, 1]");
    if (!(max_diameter_mm > 0.0)) throw InvalidArgument("SnowConfig: max diameter must be > 0");
    if (!(lambda_coeff > 0.0)) throw InvalidArgument("SnowConfig: lambda coefficient must be > 0");
  }
};

/// Probabilistic fog model constants. Attenuation factors within
/// `negligible_attenuation` of unity are below the sensor's intensity
/// quantization and are not applied.
struct FogConfig {
  double detect_threshold = 0.05;
  double scatter_prob = 0.5;
  double scatter_mean_range_m = 15.0;
  double min_range_m = 1.5;
  std::array<double, 2> noise_intensity_range = {0.0, 0.05};
  double negligible_attenuation = 0.005;

  void validate() const {
    if (detect_threshold < 0.0 || detect_threshold > 1.0)
      throw InvalidArgument("FogConfig: detect threshold must lie in [0, 1]");
    if (scatter_prob < 0.0 || scatter_prob > 1.0)
      throw InvalidArgument("FogConfig: scatter probability must lie in [0, 1]");
    if (!(scatter_mean_range_m > 0.0) || min_range_m < 0.0)
      throw InvalidArgument("FogConfig: scatter mean range must be > 0 and min range >= 0");
    if (noise_intensity_range[0] > noise_intensity_range[1] || noise_intensity_range[0] < 0.0 ||
        noise_intensity_range[1] > 1.0)
      throw InvalidArgument("FogConfig: noise intensity range must be [lo, hi] within [0, 1]");
  }
};

/// Koschmieder relation at 5% contrast: extinction coefficient for a
/// given maximum viewing distance.
inline double fog_extinction(double viewing_distance_m) {
  if (!(viewing_distance_m > 0.0))
    throw InvalidArgument("fog_extinction: viewing distance must be > 0");
  return 3.912 / viewing_distance_m;
}

}  // namespace wvox::weather

#endif
