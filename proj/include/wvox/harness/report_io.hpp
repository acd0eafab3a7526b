// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_HARNESS_REPORT_IO_HPP
#define WVOX_HARNESS_REPORT_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "wvox/harness/experiment.hpp"

namespace wvox::harness {

/// Reports print floats with 6 significant digits, in both formats.
inline std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline double round6(double v) { return std::stod(fmt6(v)); }

namespace detail_report {

using nlohmann::json;

inline json opt_to_json(const std::optional<double>& v) {
  return v ? json(round6(*v)) : json(nullptr);
}

inline std::optional<double> opt_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline json result_to_json(const ScenarioResult& r) {
  json j;
  j["scenario_id"] = r.scenario_id;
  j["params"] = {{"kind", to_string(r.params.kind)},
                 {"rate_mm_h", round6(r.params.rate_mm_h)},
                 {"density_m3", round6(r.params.density_m3)},
                 {"scale", round6(r.params.scale)},
                 {"viewing_m", round6(r.params.viewing_m)}};
  j["messages"] = r.messages;
  j["noisy_bits_total"] = r.noisy_bits_total;
  j["scheme_bits_total"] = r.scheme_bits_total;
  j["noisy_voxels"] = r.noisy_voxels;
  j["scheme_voxels"] = r.scheme_voxels;
  j["noise_voxels"] = r.noise_voxels;
  j["noisy_mbps"] = round6(r.noisy_mbps);
  j["scheme_mbps"] = opt_to_json(r.scheme_mbps);
  j["bandwidth_reduction_percent"] = opt_to_json(r.bandwidth_reduction_percent);
  j["voxel_reduction_percent"] = opt_to_json(r.voxel_reduction_percent);
  j["noise_voxel_fraction_percent"] = opt_to_json(r.noise_voxel_fraction_percent);
  j["confusion"] = {{"tp", r.confusion.tp},
                    {"fp", r.confusion.fp},
                    {"tn", r.confusion.tn},
                    {"fn", r.confusion.fn}};
  j["metrics"] = {{"accuracy_noise", opt_to_json(r.metrics.accuracy_noise)},
                  {"accuracy_no_noise", opt_to_json(r.metrics.accuracy_no_noise)},
                  {"f1_noise", opt_to_json(r.metrics.f1_noise)},
                  {"f1_no_noise", opt_to_json(r.metrics.f1_no_noise)}};
  return j;
}

inline ScenarioResult result_from_json(const json& j) {
  ScenarioResult r;
  r.scenario_id = j.at("scenario_id").get<std::string>();
  const auto& p = j.at("params");
  r.params.kind = parse_weather(p.at("kind").get<std::string>());
  r.params.rate_mm_h = p.at("rate_mm_h").get<double>();
  r.params.density_m3 = p.at("density_m3").get<double>();
  r.params.scale = p.at("scale").get<double>();
  r.params.viewing_m = p.at("viewing_m").get<double>();
  r.messages = j.at("messages").get<std::uint64_t>();
  r.noisy_bits_total = j.at("noisy_bits_total").get<std::uint64_t>();
  r.scheme_bits_total = j.at("scheme_bits_total").get<std::uint64_t>();
  r.noisy_voxels = j.at("noisy_voxels").get<std::uint64_t>();
  r.scheme_voxels = j.at("scheme_voxels").get<std::uint64_t>();
  r.noise_voxels = j.at("noise_voxels").get<std::uint64_t>();
  r.noisy_mbps = j.at("noisy_mbps").get<double>();
  r.scheme_mbps = opt_from_json(j.at("scheme_mbps"));
  r.bandwidth_reduction_percent = opt_from_json(j.at("bandwidth_reduction_percent"));
  r.voxel_reduction_percent = opt_from_json(j.at("voxel_reduction_percent"));
  r.noise_voxel_fraction_percent = opt_from_json(j.at("noise_voxel_fraction_percent"));
  const auto& c = j.at("confusion");
  r.confusion = {c.at("tp").get<std::uint64_t>(), c.at("fp").get<std::uint64_t>(),
                 c.at("tn").get<std::uint64_t>(), c.at("fn").get<std::uint64_t>()};
  const auto& m = j.at("metrics");
  r.metrics.accuracy_noise = opt_from_json(m.at("accuracy_noise"));
  r.metrics.accuracy_no_noise = opt_from_json(m.at("accuracy_no_noise"));
  r.metrics.f1_noise = opt_from_json(m.at("f1_noise"));
  r.metrics.f1_no_noise = opt_from_json(m.at("f1_no_noise"));
  return r;
}

}  // namespace detail_report

inline nlohmann::json report_to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["options"] = {{"weather", to_string(report.options.weather)},
                  {"scheme", to_string(report.options.scheme)},
                  {"denoiser", to_string(report.options.denoiser)},
                  {"high_intensity", report.options.high_intensity},
                  {"master_seed", report.options.master_seed}};
  j["config"] = config_to_json(report.config);
  auto& rows = j["scenarios"];
  rows = nlohmann::json::array();
  for (const ScenarioResult& r : report.scenarios) rows.push_back(detail_report::result_to_json(r));
  j["overall"] = detail_report::result_to_json(report.overall);
  auto& msgs = j["messages"];
  msgs = nlohmann::json::array();
  for (const MessageRow& m : report.message_rows) {
    msgs.push_back({{"scenario", m.scenario_id},
                    {"vehicle", m.vehicle_id},
                    {"frame", m.frame_id},
                    {"bits", m.bits},
                    {"noisy_bits", m.noisy_bits}});
  }
  return j;
}

inline ExperimentReport report_from_json(const nlohmann::json& j) {
  ExperimentReport report;
  const auto& o = j.at("options");
  report.options.weather = parse_weather(o.at("weather").get<std::string>());
  report.options.scheme = parse_scheme(o.at("scheme").get<std::string>());
  report.options.denoiser = parse_denoiser(o.at("denoiser").get<std::string>());
  report.options.high_intensity = o.at("high_intensity").get<bool>();
  report.options.master_seed = o.at("master_seed").get<std::uint64_t>();
  apply_config_json(report.config, j.at("config"));
  for (const auto& r : j.at("scenarios"))
    report.scenarios.push_back(detail_report::result_from_json(r));
  report.overall = detail_report::result_from_json(j.at("overall"));
  for (const auto& m : j.at("messages")) {
    report.message_rows.push_back({m.at("scenario").get<std::string>(),
                                   m.at("vehicle").get<std::string>(),
                                   m.at("frame").get<std::string>(),
                                   m.at("bits").get<std::uint64_t>(),
                                   m.at("noisy_bits").get<std::uint64_t>()});
  }
  return report;
}

namespace detail_report {

inline std::string csv_opt(const std::optional<double>& v) { return v ? fmt6(*v) : ""; }

inline void csv_row(std::string& out, const ExperimentReport& report, const ScenarioResult& r) {
  const auto& o = report.options;
  out += r.scenario_id;
  out += ',';
  out += to_string(o.weather);
  out += ',';
  out += to_string(o.scheme);
  out += ',';
  out += to_string(o.denoiser);
  out += ',';
  out += o.high_intensity ? "1" : "0";
  out += ',';
  out += std::to_string(o.master_seed);
  out += ',';
  out += std::to_string(r.messages);
  out += ',';
  out += fmt6(r.noisy_mbps);
  out += ',';
  out += csv_opt(r.scheme_mbps);
  out += ',';
  out += csv_opt(r.bandwidth_reduction_percent);
  out += ',';
  out += std::to_string(r.noisy_voxels);
  out += ',';
  out += std::to_string(r.scheme_voxels);
  out += ',';
  out += std::to_string(r.noise_voxels);
  out += ',';
  out += csv_opt(r.voxel_reduction_percent);
  out += ',';
  out += csv_opt(r.noise_voxel_fraction_percent);
  out += ',';
  out += csv_opt(r.metrics.accuracy_noise);
  out += ',';
  out += csv_opt(r.metrics.accuracy_no_noise);
  out += ',';
  out += csv_opt(r.metrics.f1_noise);
  out += ',';
  out += csv_opt(r.metrics.f1_no_noise);
  out += ',';
  out += std::to_string(r.confusion.tp);
  out += ',';
  out += std::to_string(r.confusion.fp);
  out += ',';
  out += std::to_string(r.confusion.tn);
  out += ',';
  out += std::to_string(r.confusion.fn);
  out += ',';
  out += fmt6(r.params.rate_mm_h);
  out += ',';
  out += fmt6(r.params.density_m3);
  out += ',';
  out += fmt6(r.params.scale);
  out += ',';
  out += fmt6(r.params.viewing_m);
  out += '\n';
}

}  // namespace detail_report

inline constexpr const char* kReportCsvHeader =
    "scenario,weather,scheme,denoiser,high_intensity,master_seed,messages,noisy_mbps,"
    "scheme_mbps,bandwidth_reduction_pct,noisy_voxels,scheme_voxels,noise_voxels,"
    "voxel_reduction_pct,noise_voxel_fraction_pct,accuracy_noise,accuracy_no_noise,"
    "f1_noise,f1_no_noise,tp,fp,tn,fn,rate_mm_h,density_m3,scale,viewing_m";

/// Summary CSV: one row per scenario plus the overall row, stable
/// column order, floats with 6 significant digits.
inline std::string report_to_csv(const ExperimentReport& report) {
  std::string out = kReportCsvHeader;
  out += '\n';
  for (const ScenarioResult& r : report.scenarios) detail_report::csv_row(out, report, r);
  if (!report.scenarios.empty() || report.overall.messages > 0)
    detail_report::csv_row(out, report, report.overall);
  return out;
}

/// Per-message CSV rows: scenario, scheme, vehicle, frame, bits.
inline std::string messages_to_csv(const ExperimentReport& report) {
  std::string out = "scenario,scheme,vehicle,frame,bits\n";
  for (const MessageRow& m : report.message_rows) {
    out += m.scenario_id;
    out += ',';
    out += to_string(report.options.scheme);
    out += ',';
    out += m.vehicle_id;
    out += ',';
    out += m.frame_id;
    out += ',';
    out += std::to_string(m.bits);
    out += '\n';
  }
  return out;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream fs(path, std::ios::trunc);
  if (!fs) throw IoError("cannot write " + path.string());
  fs << text;
  if (!fs) throw IoError("short write to " + path.string());
}

inline void emit_report(const ExperimentReport& report, const std::string& format,
                        const std::filesystem::path& path) {
  if (format == "json")
    write_text(path, report_to_json(report).dump(2) + "\n");
  else if (format == "csv")
    write_text(path, report_to_csv(report));
  else
    throw InvalidArgument("emit_report: format must be 'csv' or 'json'");
}

/// Standard output bundle of a `run`: report.json, report.csv,
/// messages.csv, and the fully-resolved config used.
inline void write_run_outputs(const ExperimentReport& report,
                              const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  emit_report(report, "json", out_dir / "report.json");
  emit_report(report, "csv", out_dir / "report.csv");
  write_text(out_dir / "messages.csv", messages_to_csv(report));
  write_text(out_dir / "resolved_config.json", config_to_json(report.config).dump(2) + "\n");
}

}  // namespace wvox::harness

#endif
