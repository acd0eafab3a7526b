// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "wvox/rng.hpp"
#include "wvox/weather/size_dist.hpp"

using namespace wvox;
using namespace wvox::weather;

namespace {

/// Kolmogorov-Smirnov distance between sorted samples and a CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

}  // namespace

TEST_CASE("raindrop diameters never exceed the maximum stable diameter") {
  const RainParams params{35.0, 1500.0};
  const RainConfig cfg;
  RngStream rng = RngStream(101).derive("rain-cap");
  double max_d = 0.0;
  for (int i = 0; i < 100000; ++i)
    max_d = std::max(max_d, sample_raindrop_diameter(params, rng, cfg));
  CHECK(max_d <= 6.0);
}

TEST_CASE("raindrop diameters follow the truncated lognormal") {
  const RainParams params{20.0, 1000.0};
  const RainConfig cfg;
  RngStream rng = RngStream(102).derive("rain-ks");
  std::vector<double> samples(100000);
  for (double& d : samples) d = sample_raindrop_diameter(params, rng, cfg);

  const double dg = rain_geometric_mean_mm(params.rate_mm_h, cfg);
  const double ks = ks_distance(std::move(samples), [&](double d) {
    return truncated_lognormal_cdf(d, dg, cfg.sigma_g, cfg.max_diameter_mm);
  });
  CHECK(ks < 0.01);
}

TEST_CASE("raindrop sampler is deterministic and rejects zero rate") {
  const RainParams params{30.0, 1000.0};
  RngStream a = RngStream(9).derive("beam").derive(std::uint64_t{3});
  RngStream b = RngStream(9).derive("beam").derive(std::uint64_t{3});
  for (int i = 0; i < 500; ++i)
    REQUIRE(sample_raindrop_diameter(params, a) == sample_raindrop_diameter(params, b));

  RngStream rng(1);
  CHECK_THROWS_AS(sample_raindrop_diameter({0.0, 1000.0}, rng), InvalidArgument);
}

TEST_CASE("snowflake diameters scale exactly linearly in the flake factor") {
  const double s = 3.7;
  RngStream a = RngStream(11).derive("flake");
  RngStream b = RngStream(11).derive("flake");
  const SnowParams base{10.0, 500.0, 1.0};
  const SnowParams scaled{10.0, 500.0, s};
  for (int i = 0; i < 20000; ++i) {
    const double d1 = sample_snowflake_diameter(base, a);
    const double ds = sample_snowflake_diameter(scaled, b);
    REQUIRE(ds == s * d1);
  }
}

TEST_CASE("snowflake molten diameters match the analytic exponential mean") {
  const SnowParams params{10.0, 500.0, 1.0};
  const SnowConfig cfg;
  RngStream rng = RngStream(12).derive("snow-mean");
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += sample_snowflake_diameter(params, rng, cfg);
  const double analytic = 1.0 / snow_lambda_per_mm(params.rate_mm_h, cfg);
  CHECK(std::abs(sum / n - analytic) / analytic < 0.02);
}

TEST_CASE("snow slope decreases with rate, so heavier snow means larger flakes") {
  const SnowConfig cfg;
  CHECK(snow_lambda_per_mm(20.0, cfg) < snow_lambda_per_mm(5.0, cfg));
  CHECK(1.0 / snow_lambda_per_mm(20.0, cfg) ==
        Catch::Approx(std::pow(20.0, 0.45) / 2.29).epsilon(1e-12));
}

TEST_CASE("snowflake sampler is deterministic and rejects zero rate") {
  const SnowParams params{8.0, 500.0, 2.0};
  RngStream a = RngStream(13).derive(std::uint64_t{5});
  RngStream b = RngStream(13).derive(std::uint64_t{5});
  for (int i = 0; i < 500; ++i)
    REQUIRE(sample_snowflake_diameter(params, a) == sample_snowflake_diameter(params, b));

  RngStream rng(1);
  CHECK_THROWS_AS(sample_snowflake_diameter({0.0, 500.0, 2.0}, rng), InvalidArgument);
}
