// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_HARNESS_SAMPLING_HPP
#define WVOX_HARNESS_SAMPLING_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/harness/config.hpp"
#include "wvox/rng.hpp"

namespace wvox::harness {

enum class WeatherKind { Clear, Rain, Snow, FogLight, FogDense };
enum class Scheme { Noisy, Denoised, Mixed };
enum class DenoiserKind { Oracle, Heuristic };

inline const char* to_string(WeatherKind k) {
  switch (k) {
    case WeatherKind::Clear: return "clear";
    case WeatherKind::Rain: return "rain";
    case WeatherKind::Snow: return "snow";
    case WeatherKind::FogLight: return "fog-light";
    case WeatherKind::FogDense: return "fog-dense";
  }
  return "?";
}

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::Noisy: return "noisy";
    case Scheme::Denoised: return "denoised";
    case Scheme::Mixed: return "mixed";
  }
  return "?";
}

inline const char* to_string(DenoiserKind d) {
  return d == DenoiserKind::Oracle ? "oracle" : "heuristic";
}

inline WeatherKind parse_weather(const std::string& s) {
  if (s == "clear") return WeatherKind::Clear;
  if (s == "rain") return WeatherKind::Rain;
  if (s == "snow") return WeatherKind::Snow;
  if (s == "fog-light") return WeatherKind::FogLight;
  if (s == "fog-dense") return WeatherKind::FogDense;
  throw InvalidArgument("unknown weather kind '" + s + "'");
}

inline Scheme parse_scheme(const std::string& s) {
  if (s == "noisy") return Scheme::Noisy;
  if (s == "denoised") return Scheme::Denoised;
  if (s == "mixed") return Scheme::Mixed;
  throw InvalidArgument("unknown scheme '" + s + "'");
}

inline DenoiserKind parse_denoiser(const std::string& s) {
  if (s == "oracle") return DenoiserKind::Oracle;
  if (s == "heuristic") return DenoiserKind::Heuristic;
  throw InvalidArgument("unknown denoiser '" + s + "'");
}

/// Weather parameters resolved for one scenario. Only the fields of the
/// active kind are meaningful; the rest stay zero.
struct ScenarioWeather {
  WeatherKind kind = WeatherKind::Clear;
  double rate_mm_h = 0.0;
  double density_m3 = 0.0;
  double scale = 0.0;
  double viewing_m = 0.0;
};

/// One uniform parameter set per scenario, keyed by (master seed,
/// scenario id); the same values are reused for every frame and
/// vehicle of the scenario. Draw order per kind is fixed.
inline ScenarioWeather sample_scenario_params(const WeatherRanges& ranges, WeatherKind kind,
                                              const std::string& scenario_id,
                                              std::uint64_t master_seed) {
  ranges.validate();
  RngStream rng = RngStream(master_seed).derive("scenario-params").derive(scenario_id);
  ScenarioWeather w;
  w.kind = kind;
  switch (kind) {
    case WeatherKind::Clear:
      break;
    case WeatherKind::Rain:
      w.rate_mm_h = rng.uniform(ranges.rain_rate.lo, ranges.rain_rate.hi);
      w.density_m3 = rng.uniform(ranges.rain_density.lo, ranges.rain_density.hi);
      break;
    case WeatherKind::Snow:
      w.rate_mm_h = rng.uniform(ranges.snow_rate.lo, ranges.snow_rate.hi);
      w.density_m3 = rng.uniform(ranges.snow_density.lo, ranges.snow_density.hi);
      w.scale = rng.uniform(ranges.snow_scale.lo, ranges.snow_scale.hi);
      break;
    case WeatherKind::FogLight:
      w.viewing_m = rng.uniform(ranges.fog_light_viewing.lo, ranges.fog_light_viewing.hi);
      break;
    case WeatherKind::FogDense:
      w.viewing_m = rng.uniform(ranges.fog_dense_viewing.lo, ranges.fog_dense_viewing.hi);
      break;
  }
  return w;
}

/// High-intensity protocol: the top of each rain/snow range, the lowest
/// viewing distance for fog.
inline ScenarioWeather high_intensity_params(const WeatherRanges& ranges, WeatherKind kind) {
  ScenarioWeather w;
  w.kind = kind;
  switch (kind) {
    case WeatherKind::Clear:
      break;
    case WeatherKind::Rain:
      w.rate_mm_h = ranges.rain_rate.hi;
      w.density_m3 = ranges.rain_density.hi;
      break;
    case WeatherKind::Snow:
      w.rate_mm_h = ranges.snow_rate.hi;
      w.density_m3 = ranges.snow_density.hi;
      w.scale = ranges.snow_scale.hi;
      break;
    case WeatherKind::FogLight:
      w.viewing_m = ranges.fog_light_viewing.lo;
      break;
    case WeatherKind::FogDense:
      w.viewing_m = ranges.fog_dense_viewing.lo;
      break;
  }
  return w;
}

/// Uniform ego choice among the vehicles present in a frame,
/// deterministic under (master seed, scenario, frame).
inline std::string select_ego(const std::vector<std::string>& vehicle_ids,
                              const std::string& scenario_id, const std::string& frame_id,
                              std::uint64_t master_seed) {
  if (vehicle_ids.empty()) throw InvalidArgument("select_ego: no vehicles");
  std::vector<std::string> sorted = vehicle_ids;
  std::sort(sorted.begin(), sorted.end());
  RngStream rng = RngStream(master_seed).derive("ego").derive(scenario_id).derive(frame_id);
  return sorted[rng.next_u64() % sorted.size()];
}

/// Mixed scheme split: vehicles sorted by id, the first floor(n/2)
/// denoise before transmitting, the rest send noisy grids.
inline std::set<std::string> assign_mixed(const std::vector<std::string>& cooperative_ids) {
  if (cooperative_ids.empty()) throw InvalidArgument("assign_mixed: no cooperative vehicles");
  std::vector<std::string> sorted = cooperative_ids;
  std::sort(sorted.begin(), sorted.end());
  std::set<std::string> denoising;
  for (std::size_t i = 0; i < sorted.size() / 2; ++i) denoising.insert(sorted[i]);
  return denoising;
}

}  // namespace wvox::harness

#endif
