// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_HARNESS_EXPERIMENT_HPP
#define WVOX_HARNESS_EXPERIMENT_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wvox/denoise/denoiser.hpp"
#include "wvox/denoise/metrics.hpp"
#include "wvox/harness/config.hpp"
#include "wvox/harness/dataset.hpp"
#include "wvox/harness/sampling.hpp"
#include "wvox/voxel/ops.hpp"
#include "wvox/voxel/voxelize.hpp"
#include "wvox/weather/fog_sim.hpp"
#include "wvox/weather/particle_sim.hpp"
#include "wvox/wire/bandwidth.hpp"
#include "wvox/wire/codec.hpp"

namespace wvox::harness {

struct ExperimentOptions {
  WeatherKind weather = WeatherKind::Clear;
  Scheme scheme = Scheme::Noisy;
  DenoiserKind denoiser = DenoiserKind::Oracle;
  bool high_intensity = false;
  std::uint64_t master_seed = 0;
};

/// One accepted transmission: a cooperative sender within communication
/// range of the ego for that frame.
struct MessageRow {
  std::string scenario_id;
  std::string vehicle_id;
  std::string frame_id;
  std::uint64_t bits = 0;        // as sent under the scheme
  std::uint64_t noisy_bits = 0;  // same grid without denoising
};

/// Aggregates for one scenario (or for the whole run, as "overall").
/// Scheme-side and reduction fields are absent for clear weather, where
/// no denoising is performed.
struct ScenarioResult {
  std::string scenario_id;
  ScenarioWeather params;
  std::uint64_t messages = 0;
  std::uint64_t noisy_bits_total = 0;
  std::uint64_t scheme_bits_total = 0;
  std::uint64_t noisy_voxels = 0;
  std::uint64_t scheme_voxels = 0;
  std::uint64_t noise_voxels = 0;  // ground-truth noise voxels among transmitted grids
  double noisy_mbps = 0.0;
  std::optional<double> scheme_mbps;
  std::optional<double> bandwidth_reduction_percent;
  std::optional<double> voxel_reduction_percent;
  std::optional<double> noise_voxel_fraction_percent;
  denoise::ConfusionMatrix confusion;  // over vehicles that ran the denoiser
  denoise::DenoiseMetrics metrics;
};

struct ExperimentReport {
  ExperimentOptions options;
  HarnessConfig config;
  std::vector<ScenarioResult> scenarios;
  ScenarioResult overall;
  std::vector<MessageRow> message_rows;
};

/// Applies the scenario's weather to one clear-weather cloud. Every
/// output point carries a label; clear weather labels everything
/// NoNoise without touching the points.
inline PointCloud augment_cloud(const PointCloud& cloud, const ScenarioWeather& w,
                                const HarnessConfig& cfg, const RngStream& stream) {
  switch (w.kind) {
    case WeatherKind::Clear: {
      PointCloud out = cloud;
      out.labels.assign(out.size(), NoiseLabel::NoNoise);
      return out;
    }
    case WeatherKind::Rain:
      return weather::simulate_rain(cloud, {w.rate_mm_h, w.density_m3}, cfg.beam, cfg.rain,
                                    stream);
    case WeatherKind::Snow:
      return weather::simulate_snow(cloud, {w.rate_mm_h, w.density_m3, w.scale}, cfg.beam,
                                    cfg.snow, stream);
    case WeatherKind::FogLight:
    case WeatherKind::FogDense:
      return weather::simulate_fog(cloud, {w.viewing_m}, cfg.fog, stream);
  }
  throw InvalidArgument("augment_cloud: unknown weather kind");
}

namespace detail_exp {

inline double mbps(std::uint64_t bits_total, std::uint64_t messages, double frequency_hz) {
  if (messages == 0) return 0.0;
  return static_cast<double>(bits_total) / static_cast<double>(messages) * frequency_hz / 1e6;
}

inline void finalize(ScenarioResult& r, WeatherKind kind, double frequency_hz) {
  r.noisy_mbps = mbps(r.noisy_bits_total, r.messages, frequency_hz);
  if (kind != WeatherKind::Clear) {
    r.scheme_mbps = mbps(r.scheme_bits_total, r.messages, frequency_hz);
    if (r.noisy_bits_total > 0)
      r.bandwidth_reduction_percent =
          wire::reduction_percent(r.noisy_mbps, *r.scheme_mbps);
    if (r.noisy_voxels > 0) {
      r.voxel_reduction_percent =
          100.0 * (1.0 - static_cast<double>(r.scheme_voxels) /
                             static_cast<double>(r.noisy_voxels));
      r.noise_voxel_fraction_percent =
          100.0 * static_cast<double>(r.noise_voxels) / static_cast<double>(r.noisy_voxels);
    }
    r.metrics = denoise::metrics_from(r.confusion);
  }
}

}  // namespace detail_exp

/// Runs the full protocol over a dataset: per-scenario parameter
/// sampling, per-frame ego selection, augmentation, voxelization,
/// scheme-dependent denoising, the communication range filter, message
/// encoding, and bandwidth/denoising aggregation.
inline ExperimentReport run_experiment(const std::filesystem::path& dataset_root,
                                       const ExperimentOptions& options,
                                       const HarnessConfig& config) {
  config.validate();
  ExperimentReport report;
  report.options = options;
  report.config = config;

  std::unique_ptr<denoise::Denoiser> denoiser;
  if (options.weather != WeatherKind::Clear && options.scheme != Scheme::Noisy) {
    if (options.denoiser == DenoiserKind::Oracle) {
      denoise::OracleConfig oc = config.oracle;
      oc.seed = options.master_seed;
      denoiser = std::make_unique<denoise::OracleDenoiser>(oc);
    } else {
      denoiser = std::make_unique<denoise::HeuristicDenoiser>(config.heuristic);
    }
  }

  const RngStream augment_base = RngStream(options.master_seed).derive("augment");
  report.overall.scenario_id = "overall";
  report.overall.params.kind = options.weather;

  for (const Scenario& scenario : scan_dataset(dataset_root)) {
    ScenarioResult result;
    result.scenario_id = scenario.scenario_id;
    result.params =
        options.high_intensity
            ? high_intensity_params(config.ranges, options.weather)
            : sample_scenario_params(config.ranges, options.weather, scenario.scenario_id,
                                     options.master_seed);

    std::set<std::string> denoising;
    if (options.weather != WeatherKind::Clear) {
      if (options.scheme == Scheme::Denoised)
        denoising.insert(scenario.cooperative.begin(), scenario.cooperative.end());
      else if (options.scheme == Scheme::Mixed)
        denoising = assign_mixed(scenario.cooperative);
    }

    for (const FrameEntry& frame : scenario.frames) {
      const std::vector<std::string> present = scenario.vehicle_ids(frame);
      const std::string ego =
          select_ego(present, scenario.scenario_id, frame.frame_id, options.master_seed);
      const VehicleFrame* ego_entry = nullptr;
      for (const auto& v : frame.vehicles)
        if (v.vehicle_id == ego) ego_entry = &v;

      for (const VehicleFrame& sender : frame.vehicles) {
        if (sender.vehicle_id == ego) continue;
        if (!std::binary_search(scenario.cooperative.begin(), scenario.cooperative.end(),
                                sender.vehicle_id))
          continue;
        if (!wire::in_range(sender.pose, ego_entry->pose, config.comm_range_limit_m)) continue;

        const PointCloud cloud = load_cloud(sender.cloud_path);
        const RngStream stream = augment_base.derive(scenario.scenario_id)
                                     .derive(sender.vehicle_id)
                                     .derive(frame.frame_id);
        const PointCloud augmented = augment_cloud(cloud, result.params, config, stream);
        const SparseVoxelGrid grid = voxelize(augmented, config.grid);

        const std::uint64_t noisy_bits = wire::message_bits(grid);
        result.noisy_bits_total += noisy_bits;
        result.noisy_voxels += grid.size();
        for (NoiseLabel l : grid.labels)
          if (l == NoiseLabel::Noise) ++result.noise_voxels;

        std::uint64_t sent_bits = noisy_bits;
        std::uint64_t sent_voxels = grid.size();
        if (denoiser && denoising.count(sender.vehicle_id) > 0) {
          const std::vector<NoiseLabel> predicted = denoiser->classify(grid, augmented);
          result.confusion += denoise::confusion(predicted, grid.labels);
          const SparseVoxelGrid masked = apply_mask(grid, predicted);
          sent_bits = wire::message_bits(masked);
          sent_voxels = masked.size();
        }
        result.scheme_bits_total += sent_bits;
        result.scheme_voxels += sent_voxels;
        ++result.messages;
        report.message_rows.push_back(
            {scenario.scenario_id, sender.vehicle_id, frame.frame_id, sent_bits, noisy_bits});
      }
    }

    report.overall.messages += result.messages;
    report.overall.noisy_bits_total += result.noisy_bits_total;
    report.overall.scheme_bits_total += result.scheme_bits_total;
    report.overall.noisy_voxels += result.noisy_voxels;
    report.overall.scheme_voxels += result.scheme_voxels;
    report.overall.noise_voxels += result.noise_voxels;
    report.overall.confusion += result.confusion;

    detail_exp::finalize(result, options.weather, config.frequency_hz);
    report.scenarios.push_back(std::move(result));
  }

  detail_exp::finalize(report.overall, options.weather, config.frequency_hz);
  return report;
}

}  // namespace wvox::harness

#endif
