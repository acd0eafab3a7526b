// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wvox/rng.hpp"
#include "wvox/weather/geometry.hpp"

using namespace wvox;
using namespace wvox::weather;

TEST_CASE("a beam with no rings is the single central ray") {
  BeamModel beam;
  beam.rings.clear();
  const Eigen::Vector3d dir(0.0, 1.0, 0.0);
  const auto rays = make_beam_rays(dir, 25.0, beam);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0].dir == dir);
  CHECK(rays[0].target == dir * 25.0);
}

TEST_CASE("default 19-ray layout pierces the cross-section disk") {
  const BeamModel beam;
  REQUIRE(beam.rays_per_beam() == 19);
  const double range = 50.0;
  const Eigen::Vector3d dir = Eigen::Vector3d(1.0, 0.3, -0.1).normalized();
  const auto rays = make_beam_rays(dir, range, beam);
  REQUIRE(rays.size() == 19);

  const double disk_radius = range * std::tan(beam.divergence_rad / 2.0);
  for (const BeamRay& ray : rays) {
    CHECK(std::abs(ray.dir.norm() - 1.0) < 1e-12);
    const double axial = ray.target.dot(dir);
    const double radial = (ray.target - axial * dir).norm();
    CHECK(std::abs(axial - range) < 1e-9);
    CHECK(radial <= disk_radius + 1e-6);
  }
}

TEST_CASE("ring endpoints average to the central endpoint") {
  RngStream rng(31);
  BeamModel beam;
  beam.rings = {{0.35, 5}, {0.8, 9}, {1.0, 13}};
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d dir =
        Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal()).normalized();
    const double range = rng.uniform(1.0, 80.0);
    const auto rays = make_beam_rays(dir, range, beam);
    std::size_t at = 1;
    for (const RingSpec& ring : beam.rings) {
      Eigen::Vector3d mean = Eigen::Vector3d::Zero();
      for (int k = 0; k < ring.ray_count; ++k) mean += rays[at++].target;
      mean /= ring.ray_count;
      CHECK((mean - rays[0].target).norm() < 1e-5);
    }
  }
}

TEST_CASE("make_beam_rays validates its inputs") {
  const BeamModel beam;
  CHECK_THROWS_AS(make_beam_rays(Eigen::Vector3d::Zero(), 10.0, beam), InvalidArgument);
  CHECK_THROWS_AS(make_beam_rays(Eigen::Vector3d(1.0, 1.0, 0.0), 10.0, beam), InvalidArgument);
  CHECK_THROWS_AS(make_beam_rays(Eigen::Vector3d::UnitX(), 0.0, beam), InvalidArgument);

  BeamModel bad;
  bad.rings = {{1.5, 4}};
  CHECK_THROWS_AS(make_beam_rays(Eigen::Vector3d::UnitX(), 10.0, bad), InvalidArgument);
}

TEST_CASE("ray-sphere intersection on analytic cases") {
  const Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  const Eigen::Vector3d dir = Eigen::Vector3d::UnitX();

  const auto hit = intersect_ray_sphere(origin, dir, {5.0, 0.0, 0.0}, 1.0);
  REQUIRE(hit.has_value());
  CHECK(*hit == Catch::Approx(4.0).margin(1e-12));

  CHECK_FALSE(intersect_ray_sphere(origin, dir, {5.0, 2.0, 0.0}, 1.0).has_value());

  // Origin inside the sphere: first crossing is the exit point.
  const auto exit = intersect_ray_sphere(origin, dir, {0.0, 0.0, 0.0}, 0.5);
  REQUIRE(exit.has_value());
  CHECK(*exit == Catch::Approx(0.5).margin(1e-12));

  // Sphere entirely behind the origin.
  CHECK_FALSE(intersect_ray_sphere(origin, dir, {-5.0, 0.0, 0.0}, 1.0).has_value());

  CHECK_THROWS_AS(intersect_ray_sphere(origin, dir, {1.0, 0.0, 0.0}, 0.0), InvalidArgument);
}

TEST_CASE("ray-sphere intersection matches a marching oracle") {
  RngStream rng(33);
  int hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Vector3d dir =
        Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal()).normalized();
    const Eigen::Vector3d center(rng.uniform(-3.0, 12.0), rng.uniform(-2.0, 2.0),
                                 rng.uniform(-2.0, 2.0));
    const double radius = rng.uniform(0.2, 1.5);
    const auto analytic = intersect_ray_sphere(Eigen::Vector3d::Zero(), dir, center, radius);

    // March the ray at 1e-4 m steps and record the first sample inside.
    const double step = 1e-4;
    std::optional<double> marched;
    for (double t = 0.0; t <= 16.0; t += step) {
      if ((t * dir - center).norm() <= radius) {
        marched = t;
        break;
      }
    }

    if (analytic.has_value() != marched.has_value()) {
      // Only acceptable at grazing incidence, where the chord is
      // shorter than the marching step.
      const double miss = (center - center.dot(dir) * dir).norm();
      CHECK(std::abs(miss - radius) < 1e-3);
      continue;
    }
    if (analytic) {
      ++hits;
      CHECK(std::abs(*analytic - *marched) <= step + 1e-9);
    }
  }
  CHECK(hits > 10);  // the case mix must actually exercise hits
}
