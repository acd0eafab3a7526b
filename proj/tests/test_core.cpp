// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "wvox/point_cloud.hpp"

using namespace wvox;

TEST_CASE("PointCloud validation catches broken invariants") {
  PointCloud cloud;
  cloud.points.emplace_back(1.0f, 2.0f, 3.0f, 0.5f);
  REQUIRE_NOTHROW(cloud.validate());

  cloud.labels = {NoiseLabel::Noise, NoiseLabel::NoNoise};
  CHECK_THROWS_AS(cloud.validate(), InvalidArgument);
  cloud.labels = {NoiseLabel::Noise};
  REQUIRE_NOTHROW(cloud.validate());

  cloud.points[0].intensity = 1.5f;
  CHECK_THROWS_AS(cloud.validate(), InvalidArgument);
  cloud.points[0].intensity = 0.5f;

  cloud.points[0].x = std::numeric_limits<float>::quiet_NaN();
  CHECK_THROWS_AS(cloud.validate(), InvalidArgument);
  cloud.points[0].x = 0.0f;

  cloud.timestamp = -1.0;
  CHECK_THROWS_AS(cloud.validate(), InvalidArgument);
}

TEST_CASE("Pose requires a unit quaternion") {
  Pose pose;
  REQUIRE_NOTHROW(pose.validate());
  pose.rotation = Eigen::Quaterniond(1.0, 0.1, 0.0, 0.0);  // norm > 1 + 1e-6
  CHECK_THROWS_AS(pose.validate(), InvalidArgument);
}

TEST_CASE("transform with the identity pose returns the identical cloud") {
  const PointCloud cloud = test::random_cloud(64, 1);
  const PointCloud out = transform(cloud, Pose{});
  REQUIRE(out.points == cloud.points);
}

TEST_CASE("transform applies a pure translation") {
  PointCloud cloud;
  cloud.points.emplace_back(0.0f, 0.0f, 0.0f, 0.25f);
  Pose pose;
  pose.translation = Eigen::Vector3d(1.0, 0.0, 0.0);
  const PointCloud out = transform(cloud, pose);
  CHECK(out.points[0].x == 1.0f);
  CHECK(out.points[0].y == 0.0f);
  CHECK(out.points[0].z == 0.0f);
  CHECK(out.points[0].intensity == 0.25f);
}

TEST_CASE("transform matches a rotation-matrix oracle for a 90 degree yaw") {
  const double yaw = std::numbers::pi / 2.0;
  Pose pose;
  pose.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()));

  PointCloud cloud;
  cloud.points.emplace_back(1.0f, 0.0f, 0.0f, 0.0f);
  const PointCloud out = transform(cloud, pose);
  CHECK(std::abs(out.points[0].x - 0.0f) < 1e-6f);
  CHECK(std::abs(out.points[0].y - 1.0f) < 1e-6f);
  CHECK(std::abs(out.points[0].z - 0.0f) < 1e-6f);

  // Dense oracle on a random cloud: plain 3x3 yaw matrix, by hand.
  const PointCloud big = test::random_cloud(128, 7);
  const PointCloud moved = transform(big, pose);
  for (std::size_t i = 0; i < big.size(); ++i) {
    const double ex = std::cos(yaw) * big.points[i].x - std::sin(yaw) * big.points[i].y;
    const double ey = std::sin(yaw) * big.points[i].x + std::cos(yaw) * big.points[i].y;
    CHECK(std::abs(moved.points[i].x - ex) < 1e-5);
    CHECK(std::abs(moved.points[i].y - ey) < 1e-5);
    CHECK(moved.points[i].z == big.points[i].z);
  }
}

TEST_CASE("transform preserves pairwise distances and inverts cleanly") {
  // Extent keeps coordinates below 32 m, so f32 coordinate rounding
  // stays well inside the 1e-5 budget of the invariant.
  const PointCloud cloud = test::random_cloud(80, 11, 25.0f);
  Pose pose;
  pose.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(0.83, Eigen::Vector3d(0.2, -0.4, 0.7).normalized()));
  pose.translation = Eigen::Vector3d(1.5, -2.5, 0.75);

  const PointCloud moved = transform(cloud, pose);
  RngStream pick(3);
  for (int k = 0; k < 200; ++k) {
    const auto i = static_cast<std::size_t>(pick.next_u64() % cloud.size());
    const auto j = static_cast<std::size_t>(pick.next_u64() % cloud.size());
    const double before = (cloud.points[i].position() - cloud.points[j].position()).norm();
    const double after = (moved.points[i].position() - moved.points[j].position()).norm();
    CHECK(std::abs(before - after) < 1e-5);
  }

  const PointCloud back = transform(moved, pose.inverse());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(std::abs(back.points[i].x - cloud.points[i].x) < 1e-5f);
    CHECK(std::abs(back.points[i].y - cloud.points[i].y) < 1e-5f);
    CHECK(std::abs(back.points[i].z - cloud.points[i].z) < 1e-5f);
  }
}
