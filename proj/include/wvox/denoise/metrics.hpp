// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_DENOISE_METRICS_HPP
#define WVOX_DENOISE_METRICS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox::denoise {

/// Binary confusion counts with Noise as the positive class.
struct ConfusionMatrix {
  std::uint64_t tp = 0;  // predicted noise, is noise
  std::uint64_t fp = 0;  // predicted noise, is clean
  std::uint64_t tn = 0;  // predicted clean, is clean
  std::uint64_t fn = 0;  // predicted clean, is noise

  [[nodiscard]] std::uint64_t total() const { return tp + fp + tn + fn; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
};

/// Per-class percentages. Accuracy is class-conditional (the recall of
/// that class), which stays meaningful under heavy class imbalance. A
/// class absent from the ground truth has no defined metrics and is
/// reported as absent rather than 0 or 100.
struct DenoiseMetrics {
  std::optional<double> accuracy_noise;
  std::optional<double> accuracy_no_noise;
  std::optional<double> f1_noise;
  std::optional<double> f1_no_noise;
};

inline ConfusionMatrix confusion(const std::vector<NoiseLabel>& predicted,
                                 const std::vector<NoiseLabel>& truth) {
  if (predicted.size() != truth.size())
    throw InvalidArgument("confusion: prediction and truth lengths differ");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool p = predicted[i] == NoiseLabel::Noise;
    const bool t = truth[i] == NoiseLabel::Noise;
    if (p && t)
      ++m.tp;
    else if (p && !t)
      ++m.fp;
    else if (!p && !t)
      ++m.tn;
    else
      ++m.fn;
  }
  return m;
}

inline DenoiseMetrics metrics_from(const ConfusionMatrix& m) {
  DenoiseMetrics out;
  const std::uint64_t noise_total = m.tp + m.fn;
  const std::uint64_t clean_total = m.tn + m.fp;
  if (noise_total > 0) {
    out.accuracy_noise = 100.0 * static_cast<double>(m.tp) / static_cast<double>(noise_total);
    out.f1_noise =
        100.0 * 2.0 * static_cast<double>(m.tp) / static_cast<double>(2 * m.tp + m.fp + m.fn);
  }
  if (clean_total > 0) {
    out.accuracy_no_noise = 100.0 * static_cast<double>(m.tn) / static_cast<double>(clean_total);
    out.f1_no_noise =
        100.0 * 2.0 * static_cast<double>(m.tn) / static_cast<double>(2 * m.tn + m.fn + m.fp);
  }
  return out;
}

inline std::pair<ConfusionMatrix, DenoiseMetrics> evaluate(const std::vector<NoiseLabel>& predicted,
                                                           const std::vector<NoiseLabel>& truth) {
  ConfusionMatrix m = confusion(predicted, truth);
  return {m, metrics_from(m)};
}

}  // namespace wvox::denoise

#endif
