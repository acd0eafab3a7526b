// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wvox/wvox.hpp"

namespace {

using namespace wvox;
using namespace wvox::harness;

struct GlobalOpts {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string weather = "clear";
  std::string scheme = "noisy";
  std::string denoiser = "oracle";
  bool high_intensity = false;

  [[nodiscard]] HarnessConfig load() const {
    return config_path.empty() ? HarnessConfig{} : load_config(config_path);
  }
};

ScenarioWeather resolve_weather(const GlobalOpts& g, const HarnessConfig& cfg,
                                const std::optional<double>& rate,
                                const std::optional<double>& density,
                                const std::optional<double>& scale,
                                const std::optional<double>& viewing,
                                const std::string& scenario_key) {
  const WeatherKind kind = parse_weather(g.weather);
  ScenarioWeather w = g.high_intensity ? high_intensity_params(cfg.ranges, kind)
                                       : sample_scenario_params(cfg.ranges, kind, scenario_key,
                                                                g.seed);
  if (rate) w.rate_mm_h = *rate;
  if (density) w.density_m3 = *density;
  if (scale) w.scale = *scale;
  if (viewing) w.viewing_m = *viewing;
  return w;
}

int cmd_augment(const GlobalOpts& g, const std::string& in, const std::string& out,
                const std::optional<double>& rate, const std::optional<double>& density,
                const std::optional<double>& scale, const std::optional<double>& viewing,
                const std::string& scenario_key) {
  const HarnessConfig cfg = g.load();
  const ScenarioWeather w = resolve_weather(g, cfg, rate, density, scale, viewing, scenario_key);
  const PointCloud cloud = load_cloud(in);
  const RngStream stream = RngStream(g.seed).derive("augment").derive(scenario_key).derive("cli");
  const PointCloud augmented = augment_cloud(cloud, w, cfg, stream);
  io::write_wvpc(augmented, out);
  std::uint64_t noise = 0;
  for (NoiseLabel l : augmented.labels)
    if (l == NoiseLabel::Noise) ++noise;
  std::cout << "augmented " << cloud.size() << " -> " << augmented.size() << " points ("
            << noise << " noise) under " << to_string(w.kind) << "\n";
  return 0;
}

int cmd_voxelize(const GlobalOpts& g, const std::string& in, const std::string& out) {
  const HarnessConfig cfg = g.load();
  const PointCloud cloud = load_cloud(in);
  const SparseVoxelGrid grid = voxelize(cloud, cfg.grid);
  io::write_grid_json(grid, out);
  std::cout << "voxelized " << cloud.size() << " points into " << grid.size() << " voxels\n";
  return 0;
}

int cmd_encode(const std::string& in, const std::string& out) {
  const SparseVoxelGrid grid = io::read_grid_json(in);
  const std::string msg = wire::encode(grid);
  std::ofstream fs(out, std::ios::binary | std::ios::trunc);
  if (!fs) throw IoError("cannot write " + out);
  fs.write(msg.data(), static_cast<std::streamsize>(msg.size()));
  std::cout << grid.size() << " voxels, " << wire::message_bits(grid) << " bits on the wire\n";
  return 0;
}

int cmd_denoise(const GlobalOpts& g, const std::string& grid_path, const std::string& cloud_path,
                const std::string& out, const std::string& metrics_path) {
  const HarnessConfig cfg = g.load();
  const SparseVoxelGrid grid = io::read_grid_json(grid_path);
  PointCloud cloud;
  if (!cloud_path.empty()) cloud = load_cloud(cloud_path);

  std::unique_ptr<denoise::Denoiser> den;
  if (parse_denoiser(g.denoiser) == DenoiserKind::Oracle) {
    denoise::OracleConfig oc = cfg.oracle;
    oc.seed = g.seed;
    den = std::make_unique<denoise::OracleDenoiser>(oc);
  } else {
    if (cloud_path.empty())
      throw InvalidArgument("denoise: the heuristic denoiser needs --cloud");
    den = std::make_unique<denoise::HeuristicDenoiser>(cfg.heuristic);
  }
  const std::vector<NoiseLabel> predicted = den->classify(grid, cloud);
  io::write_grid_json(apply_mask(grid, predicted), out);

  if (!metrics_path.empty()) {
    if (!grid.has_labels())
      throw InvalidArgument("denoise: --metrics needs ground-truth labels in the grid");
    const auto [confusion, metrics] = denoise::evaluate(predicted, grid.labels);
    nlohmann::json j;
    j["confusion"] = {{"tp", confusion.tp},
                      {"fp", confusion.fp},
                      {"tn", confusion.tn},
                      {"fn", confusion.fn}};
    auto opt = [](const std::optional<double>& v) {
      return v ? nlohmann::json(round6(*v)) : nlohmann::json(nullptr);
    };
    j["metrics"] = {{"accuracy_noise", opt(metrics.accuracy_noise)},
                    {"accuracy_no_noise", opt(metrics.accuracy_no_noise)},
                    {"f1_noise", opt(metrics.f1_noise)},
                    {"f1_no_noise", opt(metrics.f1_no_noise)}};
    write_text(metrics_path, j.dump(2) + "\n");
  }
  std::uint64_t removed = 0;
  for (NoiseLabel l : predicted)
    if (l == NoiseLabel::Noise) ++removed;
  std::cout << "removed " << removed << " of " << grid.size() << " voxels\n";
  return 0;
}

int cmd_run(const GlobalOpts& g, const std::string& dataset, const std::string& out_dir) {
  const HarnessConfig cfg = g.load();
  ExperimentOptions options;
  options.weather = parse_weather(g.weather);
  options.scheme = parse_scheme(g.scheme);
  options.denoiser = parse_denoiser(g.denoiser);
  options.high_intensity = g.high_intensity;
  options.master_seed = g.seed;

  const ExperimentReport report = run_experiment(dataset, options, cfg);
  write_run_outputs(report, out_dir);

  const ScenarioResult& o = report.overall;
  std::cout << "weather=" << to_string(options.weather) << " scheme=" << to_string(options.scheme)
            << " messages=" << o.messages << " noisy=" << fmt6(o.noisy_mbps) << " Mbit/s";
  if (o.scheme_mbps) std::cout << " sent=" << fmt6(*o.scheme_mbps) << " Mbit/s";
  if (o.bandwidth_reduction_percent)
    std::cout << " reduction=" << fmt6(*o.bandwidth_reduction_percent) << "%";
  std::cout << "\nreports written to " << out_dir << "\n";
  return 0;
}

int cmd_synth(const SynthConfig& base, int n_scenarios, const std::string& out) {
  for (int s = 0; s < n_scenarios; ++s) {
    SynthConfig cfg = base;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%03d", s);
    cfg.scenario_id = buf;
    cfg.geometry_seed = base.geometry_seed + static_cast<std::uint64_t>(s);
    gen_synthetic_scene(cfg, out);
  }
  std::cout << "wrote " << n_scenarios << " scenario(s) under " << out << "\n";
  return 0;
}

int cmd_report(const std::string& in, const std::string& format, const std::string& out) {
  std::ifstream fs(in);
  if (!fs) throw IoError("cannot open " + in);
  nlohmann::json j;
  try {
    fs >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(in + ": " + e.what());
  }
  emit_report(report_from_json(j), format, out);
  std::cout << "wrote " << format << " report to " << out << "\n";
  return 0;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
  if (dynamic_cast<const IoError*>(&e)) return "io";
  return "internal";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weather-augmented LiDAR voxel grid sharing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--config", g.config_path, "JSON config file (defaults apply when omitted)");
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--weather", g.weather, "clear|rain|snow|fog-light|fog-dense");
  app.add_option("--scheme", g.scheme, "noisy|denoised|mixed");
  app.add_option("--denoiser", g.denoiser, "oracle|heuristic");
  app.add_flag("--high-intensity", g.high_intensity,
               "fix parameters at the extreme end of their ranges");

  // augment
  auto* augment = app.add_subcommand("augment", "add weather noise to one cloud");
  std::string aug_in, aug_out, aug_key = "cli";
  std::optional<double> rate, density, scale, viewing;
  augment->add_option("input", aug_in, "input cloud (.pcd or .wvpc)")->required();
  augment->add_option("output", aug_out, "output labeled cloud (.wvpc)")->required();
  augment->add_option("--rate", rate, "precipitation rate, mm/h");
  augment->add_option("--density", density, "particles per m^3");
  augment->add_option("--scale", scale, "snowflake scaling factor");
  augment->add_option("--viewing", viewing, "fog viewing distance, m");
  augment->add_option("--scenario-key", aug_key, "key for parameter sampling");

  // voxelize
  auto* voxelize_cmd = app.add_subcommand("voxelize", "cloud to sparse voxel grid (json)");
  std::string vox_in, vox_out;
  voxelize_cmd->add_option("input", vox_in, "input cloud")->required();
  voxelize_cmd->add_option("output", vox_out, "output grid json")->required();

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "grid json to SVGM wire message");
  std::string enc_in, enc_out;
  encode_cmd->add_option("input", enc_in, "input grid json")->required();
  encode_cmd->add_option("output", enc_out, "output .svgm message")->required();

  // denoise
  auto* denoise_cmd = app.add_subcommand("denoise", "classify and drop noise voxels");
  std::string den_grid, den_cloud, den_out, den_metrics;
  denoise_cmd->add_option("grid", den_grid, "input grid json")->required();
  denoise_cmd->add_option("--cloud", den_cloud, "source cloud (heuristic denoiser)");
  denoise_cmd->add_option("--out", den_out, "masked grid json")->required();
  denoise_cmd->add_option("--metrics", den_metrics, "metrics json (needs labeled grid)");

  // run
  auto* run_cmd = app.add_subcommand("run", "full experiment over a dataset");
  std::string run_dataset, run_out;
  run_cmd->add_option("--dataset", run_dataset, "dataset root directory")->required();
  run_cmd->add_option("--out", run_out, "output directory")->required();

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset");
  SynthConfig synth_cfg;
  int n_scenarios = 1;
  std::string synth_out;
  synth_cmd->add_option("--out", synth_out, "dataset root to create")->required();
  synth_cmd->add_option("--scenarios", n_scenarios, "number of scenarios");
  synth_cmd->add_option("--vehicles", synth_cfg.n_vehicles, "vehicles per scenario (>= 2)");
  synth_cmd->add_option("--frames", synth_cfg.n_frames, "frames per scenario");
  synth_cmd->add_option("--points", synth_cfg.points_per_cloud, "returns per cloud");
  synth_cmd->add_option("--spacing", synth_cfg.vehicle_spacing_m, "vehicle spacing, m");
  synth_cmd->add_option("--boxes", synth_cfg.n_boxes, "box obstacles");
  synth_cmd->add_option("--geometry-seed", synth_cfg.geometry_seed, "scene geometry seed");

  // report
  auto* report_cmd = app.add_subcommand("report", "re-emit a report json as csv or json");
  std::string rep_in, rep_format = "csv", rep_out;
  report_cmd->add_option("input", rep_in, "report json")->required();
  report_cmd->add_option("--format", rep_format, "csv|json");
  report_cmd->add_option("--out", rep_out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*augment)
      return cmd_augment(g, aug_in, aug_out, rate, density, scale, viewing, aug_key);
    if (*voxelize_cmd) return cmd_voxelize(g, vox_in, vox_out);
    if (*encode_cmd) return cmd_encode(enc_in, enc_out);
    if (*denoise_cmd) return cmd_denoise(g, den_grid, den_cloud, den_out, den_metrics);
    if (*run_cmd) return cmd_run(g, run_dataset, run_out);
    if (*synth_cmd) return cmd_synth(synth_cfg, n_scenarios, synth_out);
    if (*report_cmd) return cmd_report(rep_in, rep_format, rep_out);
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = error_kind(e);
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
