// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_HARNESS_CONFIG_HPP
#define WVOX_HARNESS_CONFIG_HPP

#include <array>
#include <fstream>
#include <string>

#include <json.hpp>

#include "wvox/denoise/denoiser.hpp"
#include "wvox/error.hpp"
#include "wvox/voxel/grid.hpp"
#include "wvox/weather/params.hpp"

namespace wvox::harness {

/// Closed parameter interval for scenario sampling.
struct Range {
  double lo = 0.0;
  double hi = 0.0;

  void validate(const std::string& name) const {
    if (lo > hi) throw InvalidArgument("range " + name + ": lo > hi");
  }
};

/// Per-weather sampling ranges; defaults are the evaluation protocol's.
struct WeatherRanges {
  Range snow_rate{5.0, 20.0};          // mm/h
  Range snow_density{500.0, 2000.0};   // flakes per m^3
  Range snow_scale{2.0, 5.0};
  Range rain_rate{20.0, 50.0};         // mm/h
  Range rain_density{1000.0, 2000.0};  // drops per m^3
  Range fog_light_viewing{70.0, 200.0};  // m
  Range fog_dense_viewing{30.0, 100.0};  // m

  void validate() const {
    snow_rate.validate("snow_rate");
    snow_density.validate("snow_density");
    snow_scale.validate("snow_scale");
    rain_rate.validate("rain_rate");
    rain_density.validate("rain_density");
    fog_light_viewing.validate("fog_light_viewing");
    fog_dense_viewing.validate("fog_dense_viewing");
  }
};

/// Fully resolved experiment configuration. Every run writes this back
/// out next to its results so reports are replayable.
struct HarnessConfig {
  weather::BeamModel beam;
  weather::RainConfig rain;
  weather::SnowConfig snow;
  weather::FogConfig fog;
  GridSpec grid;
  WeatherRanges ranges;
  double comm_range_limit_m = 70.0;
  double frequency_hz = 10.0;
  denoise::OracleConfig oracle;
  denoise::HeuristicConfig heuristic;

  void validate() const {
    beam.validate();
    rain.validate();
    snow.validate();
    fog.validate();
    grid.validate();
    ranges.validate();
    oracle.validate();
    heuristic.validate();
    if (!(comm_range_limit_m > 0.0) || !(frequency_hz > 0.0))
      throw InvalidArgument("config: comm range limit and frequency must be > 0");
  }
};

namespace detail {

using nlohmann::json;

inline void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                        const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw ParseError("config: unknown field '" + where + "." + key + "'");
  }
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

inline void maybe_range(const json& j, const char* key, Range& out) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2)
    throw ParseError(std::string("config: '") + key + "' must be [lo, hi]");
  out.lo = v[0].get<double>();
  out.hi = v[1].get<double>();
}

inline void maybe_pair(const json& j, const char* key, std::array<double, 2>& out) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2)
    throw ParseError(std::string("config: '") + key + "' must be [lo, hi]");
  out = {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace detail

inline void apply_config_json(HarnessConfig& cfg, const nlohmann::json& j) {
  using detail::expect_keys;
  using detail::maybe;
  using detail::maybe_pair;
  using detail::maybe_range;

  expect_keys(j, {"beam", "rain", "snow", "fog", "grid", "ranges", "comm", "oracle", "heuristic"},
              "");
  if (j.contains("beam")) {
    const auto& b = j.at("beam");
    expect_keys(b, {"divergence_rad", "rings"}, "beam");
    maybe(b, "divergence_rad", cfg.beam.divergence_rad);
    if (b.contains("rings")) {
      cfg.beam.rings.clear();
      for (const auto& r : b.at("rings")) {
        if (!r.is_array() || r.size() != 2)
          throw ParseError("config: 'beam.rings' entries must be [radius_fraction, ray_count]");
        cfg.beam.rings.push_back({r[0].get<double>(), r[1].get<int>()});
      }
    }
  }
  if (j.contains("rain")) {
    const auto& r = j.at("rain");
    expect_keys(r,
                {"theta_mod", "theta_scatter", "max_diameter_mm", "relocated_intensity",
                 "dg_coeff_mm", "dg_rate_exp", "sigma_g"},
                "rain");
    maybe(r, "theta_mod", cfg.rain.theta_mod);
    maybe(r, "theta_scatter", cfg.rain.theta_scatter);
    maybe(r, "max_diameter_mm", cfg.rain.max_diameter_mm);
    maybe_pair(r, "relocated_intensity", cfg.rain.relocated_intensity_range);
    maybe(r, "dg_coeff_mm", cfg.rain.dg_coeff_mm);
    maybe(r, "dg_rate_exp", cfg.rain.dg_rate_exp);
    maybe(r, "sigma_g", cfg.rain.sigma_g);
  }
  if (j.contains("snow")) {
    const auto& s = j.at("snow");
    expect_keys(s,
                {"theta_mod", "theta_scatter", "max_diameter_mm", "relocated_intensity",
                 "lambda_coeff", "lambda_rate_exp"},
                "snow");
    maybe(s, "theta_mod", cfg.snow.theta_mod);
    maybe(s, "theta_scatter", cfg.snow.theta_scatter);
    maybe(s, "max_diameter_mm", cfg.snow.max_diameter_mm);
    maybe_pair(s, "relocated_intensity", cfg.snow.relocated_intensity_range);
    maybe(s, "lambda_coeff", cfg.snow.lambda_coeff);
    maybe(s, "lambda_rate_exp", cfg.snow.lambda_rate_exp);
  }
  if (j.contains("fog")) {
    const auto& f = j.at("fog");
    expect_keys(f,
                {"detect_threshold", "scatter_prob", "scatter_mean_range_m", "min_range_m",
                 "noise_intensity", "negligible_attenuation"},
                "fog");
    maybe(f, "detect_threshold", cfg.fog.detect_threshold);
    maybe(f, "scatter_prob", cfg.fog.scatter_prob);
    maybe(f, "scatter_mean_range_m", cfg.fog.scatter_mean_range_m);
    maybe(f, "min_range_m", cfg.fog.min_range_m);
    maybe_pair(f, "noise_intensity", cfg.fog.noise_intensity_range);
    maybe(f, "negligible_attenuation", cfg.fog.negligible_attenuation);
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    expect_keys(g, {"origin", "voxel_size", "dims"}, "grid");
    if (g.contains("origin")) {
      const auto& o = g.at("origin");
      if (!o.is_array() || o.size() != 3) throw ParseError("config: 'grid.origin' must be [x,y,z]");
      for (int a = 0; a < 3; ++a) cfg.grid.origin[a] = o[a].get<double>();
    }
    if (g.contains("voxel_size")) {
      const auto& v = g.at("voxel_size");
      if (!v.is_array() || v.size() != 3)
        throw ParseError("config: 'grid.voxel_size' must be [x,y,z]");
      for (int a = 0; a < 3; ++a) cfg.grid.voxel_size[a] = v[a].get<float>();
    }
    if (g.contains("dims")) {
      const auto& d = g.at("dims");
      if (!d.is_array() || d.size() != 3) throw ParseError("config: 'grid.dims' must be [x,y,z]");
      for (int a = 0; a < 3; ++a) cfg.grid.dims[a] = d[a].get<std::uint32_t>();
    }
  }
  if (j.contains("ranges")) {
    const auto& r = j.at("ranges");
    expect_keys(r,
                {"snow_rate", "snow_density", "snow_scale", "rain_rate", "rain_density",
                 "fog_light_viewing", "fog_dense_viewing"},
                "ranges");
    maybe_range(r, "snow_rate", cfg.ranges.snow_rate);
    maybe_range(r, "snow_density", cfg.ranges.snow_density);
    maybe_range(r, "snow_scale", cfg.ranges.snow_scale);
    maybe_range(r, "rain_rate", cfg.ranges.rain_rate);
    maybe_range(r, "rain_density", cfg.ranges.rain_density);
    maybe_range(r, "fog_light_viewing", cfg.ranges.fog_light_viewing);
    maybe_range(r, "fog_dense_viewing", cfg.ranges.fog_dense_viewing);
  }
  if (j.contains("comm")) {
    const auto& c = j.at("comm");
    expect_keys(c, {"range_limit_m", "frequency_hz"}, "comm");
    maybe(c, "range_limit_m", cfg.comm_range_limit_m);
    maybe(c, "frequency_hz", cfg.frequency_hz);
  }
  if (j.contains("oracle")) {
    const auto& o = j.at("oracle");
    expect_keys(o, {"flip_noise", "flip_no_noise"}, "oracle");
    maybe(o, "flip_noise", cfg.oracle.flip_noise);
    maybe(o, "flip_no_noise", cfg.oracle.flip_no_noise);
  }
  if (j.contains("heuristic")) {
    const auto& h = j.at("heuristic");
    expect_keys(h, {"intensity_threshold", "neighbor_radius", "min_neighbors"}, "heuristic");
    maybe(h, "intensity_threshold", cfg.heuristic.intensity_threshold);
    maybe(h, "neighbor_radius", cfg.heuristic.neighbor_radius);
    maybe(h, "min_neighbors", cfg.heuristic.min_neighbors);
  }
  cfg.validate();
}

/// Defaults overridden by the (possibly partial) JSON file at `path`.
inline HarnessConfig load_config(const std::string& path) {
  std::ifstream fs(path);
  if (!fs) throw IoError("cannot open config file " + path);
  nlohmann::json j;
  try {
    fs >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config " + path + ": " + e.what());
  }
  HarnessConfig cfg;
  apply_config_json(cfg, j);
  return cfg;
}

/// The fully-resolved config as JSON, the inverse of apply_config_json.
inline nlohmann::json config_to_json(const HarnessConfig& cfg) {
  nlohmann::json j;
  j["beam"]["divergence_rad"] = cfg.beam.divergence_rad;
  auto& rings = j["beam"]["rings"];
  rings = nlohmann::json::array();
  for (const auto& r : cfg.beam.rings) rings.push_back({r.radius_fraction, r.ray_count});
  j["rain"] = {{"theta_mod", cfg.rain.theta_mod},
               {"theta_scatter", cfg.rain.theta_scatter},
               {"max_diameter_mm", cfg.rain.max_diameter_mm},
               {"relocated_intensity", cfg.rain.relocated_intensity_range},
               {"dg_coeff_mm", cfg.rain.dg_coeff_mm},
               {"dg_rate_exp", cfg.rain.dg_rate_exp},
               {"sigma_g", cfg.rain.sigma_g}};
  j["snow"] = {{"theta_mod", cfg.snow.theta_mod},
               {"theta_scatter", cfg.snow.theta_scatter},
               {"max_diameter_mm", cfg.snow.max_diameter_mm},
               {"relocated_intensity", cfg.snow.relocated_intensity_range},
               {"lambda_coeff", cfg.snow.lambda_coeff},
               {"lambda_rate_exp", cfg.snow.lambda_rate_exp}};
  j["fog"] = {{"detect_threshold", cfg.fog.detect_threshold},
              {"scatter_prob", cfg.fog.scatter_prob},
              {"scatter_mean_range_m", cfg.fog.scatter_mean_range_m},
              {"min_range_m", cfg.fog.min_range_m},
              {"noise_intensity", cfg.fog.noise_intensity_range},
              {"negligible_attenuation", cfg.fog.negligible_attenuation}};
  j["grid"] = {{"origin", {cfg.grid.origin[0], cfg.grid.origin[1], cfg.grid.origin[2]}},
               {"voxel_size",
                {cfg.grid.voxel_size[0], cfg.grid.voxel_size[1], cfg.grid.voxel_size[2]}},
               {"dims", cfg.grid.dims}};
  j["ranges"] = {{"snow_rate", {cfg.ranges.snow_rate.lo, cfg.ranges.snow_rate.hi}},
                 {"snow_density", {cfg.ranges.snow_density.lo, cfg.ranges.snow_density.hi}},
                 {"snow_scale", {cfg.ranges.snow_scale.lo, cfg.ranges.snow_scale.hi}},
                 {"rain_rate", {cfg.ranges.rain_rate.lo, cfg.ranges.rain_rate.hi}},
                 {"rain_density", {cfg.ranges.rain_density.lo, cfg.ranges.rain_density.hi}},
                 {"fog_light_viewing",
                  {cfg.ranges.fog_light_viewing.lo, cfg.ranges.fog_light_viewing.hi}},
                 {"fog_dense_viewing",
                  {cfg.ranges.fog_dense_viewing.lo, cfg.ranges.fog_dense_viewing.hi}}};
  j["comm"] = {{"range_limit_m", cfg.comm_range_limit_m}, {"frequency_hz", cfg.frequency_hz}};
  j["oracle"] = {{"flip_noise", cfg.oracle.flip_noise},
                 {"flip_no_noise", cfg.oracle.flip_no_noise}};
  j["heuristic"] = {{"intensity_threshold", cfg.heuristic.intensity_threshold},
                    {"neighbor_radius", cfg.heuristic.neighbor_radius},
                    {"min_neighbors", cfg.heuristic.min_neighbors}};
  return j;
}

}  // namespace wvox::harness

#endif
