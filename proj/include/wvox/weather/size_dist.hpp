// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WEATHER_SIZE_DIST_HPP
#define WVOX_WEATHER_SIZE_DIST_HPP

#include <cmath>
#include <numbers>

#include "wvox/error.hpp"
#include "wvox/rng.hpp"
#include "wvox/weather/params.hpp"

namespace wvox::weather {

/// Geometric mean raindrop diameter of the Feingold-Levin lognormal
/// size distribution, in mm.
inline double rain_geometric_mean_mm(double rate_mm_h, const RainConfig& cfg = {}) {
  return cfg.dg_coeff_mm * std::pow(rate_mm_h, cfg.dg_rate_exp);
}

/// Gunn-Marshall / Sekhon-Srivastava exponential slope for molten
/// snowflake diameters, in 1/mm.
inline double snow_lambda_per_mm(double rate_mm_h, const SnowConfig& cfg = {}) {
  return cfg.lambda_coeff * std::pow(rate_mm_h, cfg.lambda_rate_exp);
}

/// One raindrop diameter in mm: lognormal draw, rejection-resampled
/// until it does not exceed the maximum stable diameter.
inline double sample_raindrop_diameter(const RainParams& params, RngStream& rng,
                                       const RainConfig& cfg = {}) {
  if (!(params.rate_mm_h > 0.0))
    throw InvalidArgument("sample_raindrop_diameter: rate must be > 0");
  const double mu = std::log(rain_geometric_mean_mm(params.rate_mm_h, cfg));
  const double sigma = std::log(cfg.sigma_g);
  double d = 0.0;
  do {
    d = std::exp(rng.normal(mu, sigma));
  } while (d > cfg.max_diameter_mm);
  return d;
}

/// One snowflake diameter in mm: molten-equivalent exponential draw
/// capped at the molten maximum, then scaled by the flake factor.
inline double sample_snowflake_diameter(const SnowParams& params, RngStream& rng,
                                        const SnowConfig& cfg = {}) {
  if (!(params.rate_mm_h > 0.0))
    throw InvalidArgument("sample_snowflake_diameter: rate must be > 0");
  const double lambda = snow_lambda_per_mm(params.rate_mm_h, cfg);
  double d = 0.0;
  do {
    d = rng.exponential(lambda);
  } while (d > cfg.max_diameter_mm);
  return d * params.scale;
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

/// CDF of the lognormal(ln Dg, ln sigma_g) distribution truncated to
/// (0, cap]. Analytic reference for distribution tests.
inline double truncated_lognormal_cdf(double d, double dg_mm, double sigma_g, double cap_mm) {
  if (d <= 0.0) return 0.0;
  if (d >= cap_mm) return 1.0;
  const double s = std::log(sigma_g);
  const double z = (std::log(d) - std::log(dg_mm)) / s;
  const double zcap = (std::log(cap_mm) - std::log(dg_mm)) / s;
  return normal_cdf(z) / normal_cdf(zcap);
}

/// CDF of Exp(lambda) truncated to [lo, hi]. Analytic reference for
/// distribution tests.
inline double truncated_exponential_cdf(double x, double lambda, double lo, double hi) {
  if (x <= lo) return 0.0;
  if (x >= hi) return 1.0;
  const double flo = std::exp(-lambda * lo);
  const double fhi = std::exp(-lambda * hi);
  return (flo - std::exp(-lambda * x)) / (flo - fhi);
}

}  // namespace wvox::weather

#endif
