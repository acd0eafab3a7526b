// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_HARNESS_SYNTH_HPP
#define WVOX_HARNESS_SYNTH_HPP

#include <Eigen/Dense>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "wvox/error.hpp"
#include "wvox/harness/dataset.hpp"
#include "wvox/io/pose_io.hpp"
#include "wvox/io/wvpc_io.hpp"
#include "wvox/rng.hpp"

namespace wvox::harness {

/// Desk-scale stand-in for a recorded cooperative scenario: a ground
/// plane with box obstacles, sampled as LiDAR-like range returns from
/// each vehicle pose.
struct SynthConfig {
  std::string scenario_id = "s000";
  int n_vehicles = 2;  // >= 2
  int n_frames = 2;
  std::size_t points_per_cloud = 100000;
  std::uint64_t geometry_seed = 0;
  double vehicle_spacing_m = 20.0;
  double vehicle_step_m = 1.0;  // forward motion per frame
  int n_boxes = 12;
  double sensor_height_m = 1.8;
  int n_rings = 32;
  double elevation_min_deg = -25.0;
  double elevation_max_deg = 2.0;
  double max_range_m = 100.0;

  void validate() const {
    if (n_vehicles < 2) throw InvalidArgument("SynthConfig: need at least 2 vehicles");
    if (n_frames < 1 || n_rings < 1 || n_boxes < 0)
      throw InvalidArgument("SynthConfig: frames and rings must be >= 1, boxes >= 0");
    if (!(max_range_m > 0.0)) throw InvalidArgument("SynthConfig: max range must be > 0");
  }
};

namespace detail_synth {

struct Box {
  Eigen::Vector3d lo, hi;
};

/// Slab-method ray/AABB hit, entry distance only.
inline std::optional<double> ray_box(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir,
                                     const Box& box) {
  double t_enter = 0.0, t_exit = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    if (std::abs(dir[a]) < 1e-12) {
      if (origin[a] < box.lo[a] || origin[a] > box.hi[a]) return std::nullopt;
      continue;
    }
    double t0 = (box.lo[a] - origin[a]) / dir[a];
    double t1 = (box.hi[a] - origin[a]) / dir[a];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (t_enter > t_exit) return std::nullopt;
  }
  if (t_enter <= 0.0) return std::nullopt;
  return t_enter;
}

inline std::vector<Box> make_boxes(const SynthConfig& cfg, RngStream& rng) {
  std::vector<Box> boxes;
  boxes.reserve(static_cast<std::size_t>(cfg.n_boxes));
  const double span_x = cfg.vehicle_spacing_m * (cfg.n_vehicles - 1);
  for (int i = 0; i < cfg.n_boxes; ++i) {
    const double cx = rng.uniform(-15.0, span_x + 15.0);
    const double cy = rng.uniform(-25.0, 25.0);
    const double sx = rng.uniform(1.0, 4.0);
    const double sy = rng.uniform(1.0, 4.0);
    const double sz = rng.uniform(0.5, 2.5);
    boxes.push_back({{cx - sx / 2, cy - sy / 2, 0.0}, {cx + sx / 2, cy + sy / 2, sz}});
  }
  return boxes;
}

}  // namespace detail_synth

/// Simulated sweep from one sensor position against a ground plane at
/// z = 0 plus boxes, in the sensor frame. Ray order (ring-major, then
/// azimuth) and the intensity jitter stream are deterministic, and the
/// cloud is truncated to at most `points_per_cloud` returns.
inline PointCloud synth_sweep(const SynthConfig& cfg, const Eigen::Vector3d& sensor_world,
                              const std::vector<detail_synth::Box>& boxes, RngStream jitter) {
  PointCloud cloud;
  const int n_az =
      static_cast<int>((cfg.points_per_cloud + cfg.n_rings - 1) / cfg.n_rings * 5 / 4);
  const double el_lo = cfg.elevation_min_deg * std::numbers::pi / 180.0;
  const double el_hi = cfg.elevation_max_deg * std::numbers::pi / 180.0;

  for (int ring = 0; ring < cfg.n_rings && cloud.size() < cfg.points_per_cloud; ++ring) {
    const double el =
        cfg.n_rings == 1 ? el_lo : el_lo + (el_hi - el_lo) * ring / (cfg.n_rings - 1);
    for (int a = 0; a < n_az && cloud.size() < cfg.points_per_cloud; ++a) {
      const double az = 2.0 * std::numbers::pi * a / n_az;
      const Eigen::Vector3d dir(std::cos(el) * std::cos(az), std::cos(el) * std::sin(az),
                                std::sin(el));
      double best_t = cfg.max_range_m;
      double base_intensity = 0.0;
      if (dir.z() < -1e-9) {  // ground plane z = 0
        const double t = -sensor_world.z() / dir.z();
        if (t > 0.1 && t < best_t) {
          best_t = t;
          base_intensity = 0.30;
        }
      }
      for (const auto& box : boxes) {
        const auto t = detail_synth::ray_box(sensor_world, dir, box);
        if (t && *t > 0.1 && *t < best_t) {
          best_t = *t;
          base_intensity = 0.55;
        }
      }
      if (base_intensity == 0.0) continue;  // sky
      const double jitter_u = jitter.next_double();
      const Eigen::Vector3d p = dir * best_t;  // sensor frame (identity rotation)
      cloud.points.emplace_back(static_cast<float>(p.x()), static_cast<float>(p.y()),
                                static_cast<float>(p.z()),
                                static_cast<float>(base_intensity * (0.9 + 0.2 * jitter_u)));
    }
  }
  cloud.labels.assign(cloud.size(), NoiseLabel::NoNoise);
  return cloud;
}

/// Writes one scenario in the dataset layout: per-frame, per-vehicle
/// WVPC clouds (all labeled NoNoise) plus poses.json. Byte-identical
/// output for identical configs.
inline void gen_synthetic_scene(const SynthConfig& cfg, const std::filesystem::path& out_root) {
  cfg.validate();
  RngStream geom(cfg.geometry_seed);
  RngStream box_stream = geom.derive("boxes").derive(cfg.scenario_id);
  const std::vector<detail_synth::Box> boxes = detail_synth::make_boxes(cfg, box_stream);

  const std::filesystem::path scenario_dir = out_root / cfg.scenario_id;
  std::error_code ec;
  std::filesystem::create_directories(scenario_dir, ec);
  if (ec) throw IoError("cannot create " + scenario_dir.string() + ": " + ec.message());

  nlohmann::json frames_json = nlohmann::json::object();
  std::vector<std::string> vehicle_ids;
  for (int v = 0; v < cfg.n_vehicles; ++v) {
    std::ostringstream id;
    id << 'v' << std::setw(3) << std::setfill('0') << v;
    vehicle_ids.push_back(id.str());
  }

  for (int f = 0; f < cfg.n_frames; ++f) {
    std::ostringstream fid;
    fid << std::setw(6) << std::setfill('0') << f;
    const std::string frame_id = fid.str();
    const std::filesystem::path frame_dir = scenario_dir / frame_id;
    std::filesystem::create_directories(frame_dir, ec);
    if (ec) throw IoError("cannot create " + frame_dir.string() + ": " + ec.message());

    nlohmann::json poses = nlohmann::json::array();
    for (int v = 0; v < cfg.n_vehicles; ++v) {
      Pose pose;
      pose.translation = Eigen::Vector3d(cfg.vehicle_spacing_m * v + cfg.vehicle_step_m * f, 0.0,
                                         cfg.sensor_height_m);
      poses.push_back(io::pose_to_json(vehicle_ids[v], pose));

      RngStream jitter =
          geom.derive("sweep").derive(cfg.scenario_id).derive(vehicle_ids[v]).derive(frame_id);
      PointCloud cloud = synth_sweep(cfg, pose.translation, boxes, jitter);
      cloud.frame_id = frame_id;
      cloud.vehicle_id = vehicle_ids[v];
      io::write_wvpc(cloud, (frame_dir / (vehicle_ids[v] + ".wvpc")).string());
    }
    frames_json[frame_id] = std::move(poses);
  }

  nlohmann::json meta;
  meta["cooperative"] = vehicle_ids;
  meta["frames"] = std::move(frames_json);
  std::ofstream out(scenario_dir / "poses.json", std::ios::trunc);
  if (!out) throw IoError("cannot write " + (scenario_dir / "poses.json").string());
  out << meta.dump(2) << '\n';
}

}  // namespace wvox::harness

#endif
