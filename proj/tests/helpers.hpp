// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_TESTS_HELPERS_HPP
#define WVOX_TESTS_HELPERS_HPP

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "wvox/point_cloud.hpp"
#include "wvox/rng.hpp"

namespace wvox::test {

/// Self-deleting scratch directory for file-format tests.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("wvox-" + tag + "-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  [[nodiscard]] std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream fs(path, std::ios::binary | std::ios::trunc);
  fs << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream fs(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(fs), std::istreambuf_iterator<char>()};
}

/// Deterministic random cloud in a box around the sensor.
inline PointCloud random_cloud(std::size_t n, std::uint64_t seed, float extent = 50.0f) {
  RngStream rng(seed);
  PointCloud cloud;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cloud.points.emplace_back(static_cast<float>(rng.uniform(-extent, extent)),
                              static_cast<float>(rng.uniform(-extent, extent)),
                              static_cast<float>(rng.uniform(-3.0, 1.0)),
                              static_cast<float>(rng.next_double()));
  }
  return cloud;
}

}  // namespace wvox::test

#endif
