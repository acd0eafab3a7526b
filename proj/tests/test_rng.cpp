// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "wvox/rng.hpp"

using namespace wvox;

TEST_CASE("identical seed and key path replay the identical sequence") {
  RngStream a = RngStream(42).derive("scenario").derive("v1").derive(std::uint64_t{7});
  RngStream b = RngStream(42).derive("scenario").derive("v1").derive(std::uint64_t{7});
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("different keys decorrelate streams") {
  RngStream a = RngStream(42).derive("v1");
  RngStream b = RngStream(42).derive("v2");
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++equal;
  CHECK(equal == 0);
}

TEST_CASE("uniform doubles stay in [0,1) with the right mean") {
  RngStream rng(5);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("normal sampler has the requested moments") {
  RngStream rng(6);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal(3.0, 2.0);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean - 3.0) < 0.03);
  CHECK(std::abs(var - 4.0) < 0.1);
}

TEST_CASE("exponential sampler means and domain errors") {
  RngStream rng(7);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.exponential(0.25);
  CHECK(std::abs(sum / n - 4.0) < 0.08);
  CHECK_THROWS_AS(rng.exponential(0.0), InvalidArgument);
}

TEST_CASE("truncated exponential honors its bounds") {
  RngStream rng(8);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.truncated_exponential(1.0 / 15.0, 1.5, 30.0);
    REQUIRE(x >= 1.5);
    REQUIRE(x <= 30.0);
  }
  CHECK(rng.truncated_exponential(1.0, 2.0, 2.0) == 2.0);
}

TEST_CASE("poisson sampler matches its mean in both regimes") {
  RngStream rng(9);
  for (double lambda : {0.5, 4.0, 40.0, 400.0}) {
    const int n = 20000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(rng.poisson(lambda));
    const double tol = 4.0 * std::sqrt(lambda / n);
    CHECK(std::abs(sum / n - lambda) < tol);
  }
  CHECK(rng.poisson(0.0) == 0);
}
