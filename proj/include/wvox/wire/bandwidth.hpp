// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WIRE_BANDWIDTH_HPP
#define WVOX_WIRE_BANDWIDTH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox::wire {

/// Transmission accounting for one scheme: raw message sizes and the
/// mean per-vehicle sending rate. Mbit is SI, 10^6 bits.
struct BandwidthReport {
  std::vector<std::uint64_t> bits_per_message;  // one entry per (vehicle, frame)
  double frequency_hz = 10.0;
  double mean_mbps = 0.0;
  std::optional<double> reduction_percent;  // vs a baseline report
};

/// Percentage saved relative to a baseline: (1 - b/b0) * 100.
inline double reduction_percent(double baseline_mbps, double scheme_mbps) {
  if (!(baseline_mbps > 0.0))
    throw InvalidArgument("reduction_percent: baseline must be > 0");
  return (1.0 - scheme_mbps / baseline_mbps) * 100.0;
}

/// Mean bandwidth over per-message bit counts at the given sensor
/// frequency.
inline BandwidthReport bandwidth(std::vector<std::uint64_t> bits_per_message,
                                 double frequency_hz = 10.0) {
  if (bits_per_message.empty()) throw InvalidArgument("bandwidth: no messages");
  if (!(frequency_hz > 0.0)) throw InvalidArgument("bandwidth: frequency must be > 0");
  BandwidthReport report;
  long double total = 0.0;
  for (std::uint64_t b : bits_per_message) total += static_cast<long double>(b);
  report.mean_mbps = static_cast<double>(total / bits_per_message.size() * frequency_hz / 1e6L);
  report.bits_per_message = std::move(bits_per_message);
  report.frequency_hz = frequency_hz;
  return report;
}

/// Communication range filter; the boundary is inclusive at exactly
/// `limit` meters.
inline bool in_range(const Pose& sender, const Pose& ego, double limit_m = 70.0) {
  return (sender.translation - ego.translation).norm() <= limit_m;
}

}  // namespace wvox::wire

#endif
