// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "helpers.hpp"
#include "wvox/io/pcd_io.hpp"
#include "wvox/io/pose_io.hpp"
#include "wvox/io/wvpc_io.hpp"

using namespace wvox;

namespace {

std::string pcd_header(int points, const std::string& fields = "x y z intensity") {
  return "# .PCD v0.7 - Point Cloud Data file format\n"
         "VERSION 0.7\n"
         "FIELDS " + fields + "\n"
         "SIZE 4 4 4 4\n"
         "TYPE F F F F\n"
         "COUNT 1 1 1 1\n"
         "WIDTH " + std::to_string(points) + "\n"
         "HEIGHT 1\n"
         "VIEWPOINT 0 0 0 1 0 0 0\n"
         "POINTS " + std::to_string(points) + "\n"
         "DATA ascii\n";
}

}  // namespace

TEST_CASE("read_pcd handles the empty cloud") {
  test::TempDir dir("pcd");
  test::write_file(dir.file("empty.pcd"), pcd_header(0));
  const PointCloud cloud = io::read_pcd(dir.file("empty.pcd"));
  CHECK(cloud.empty());
}

TEST_CASE("read_pcd maps one row to one point") {
  test::TempDir dir("pcd");
  test::write_file(dir.file("one.pcd"), pcd_header(1) + "1.0 2.0 3.0 0.5\n");
  const PointCloud cloud = io::read_pcd(dir.file("one.pcd"));
  REQUIRE(cloud.size() == 1);
  CHECK(cloud.points[0] == Point(1.0f, 2.0f, 3.0f, 0.5f));
}

TEST_CASE("read_pcd normalizes 0-255 intensities to [0,1]") {
  test::TempDir dir("pcd");
  test::write_file(dir.file("scaled.pcd"),
                   pcd_header(3) + "0 0 0 0\n1 1 1 127.5\n2 2 2 255\n");
  const PointCloud cloud = io::read_pcd(dir.file("scaled.pcd"));
  REQUIRE(cloud.size() == 3);
  CHECK(cloud.points[0].intensity == 0.0f);
  CHECK(cloud.points[1].intensity == 0.5f);
  CHECK(cloud.points[2].intensity == 1.0f);
}

TEST_CASE("read_pcd keeps intensities already in [0,1]") {
  test::TempDir dir("pcd");
  test::write_file(dir.file("unit.pcd"), pcd_header(2) + "0 0 0 0.25\n1 1 1 1.0\n");
  const PointCloud cloud = io::read_pcd(dir.file("unit.pcd"));
  CHECK(cloud.points[0].intensity == 0.25f);
  CHECK(cloud.points[1].intensity == 1.0f);
}

TEST_CASE("read_pcd reorders by FIELDS and ignores extras") {
  test::TempDir dir("pcd");
  test::write_file(dir.file("swapped.pcd"),
                   pcd_header(1, "intensity z y x ring") + "0.5 3 2 1 9\n");
  const PointCloud cloud = io::read_pcd(dir.file("swapped.pcd"));
  CHECK(cloud.points[0] == Point(1.0f, 2.0f, 3.0f, 0.5f));
}

TEST_CASE("read_pcd errors name the offending line") {
  test::TempDir dir("pcd");

  test::write_file(dir.file("badrow.pcd"), pcd_header(1) + "1.0 2.0 oops 0.5\n");
  CHECK_THROWS_WITH(io::read_pcd(dir.file("badrow.pcd")),
                    Catch::Matchers::ContainsSubstring(":12:"));

  test::write_file(dir.file("short.pcd"), pcd_header(1) + "1.0 2.0 0.5\n");
  CHECK_THROWS_WITH(io::read_pcd(dir.file("short.pcd")),
                    Catch::Matchers::ContainsSubstring("expected 4 values"));

  test::write_file(dir.file("nofields.pcd"),
                   "VERSION 0.7\nFIELDS x y z\nPOINTS 0\nDATA ascii\n");
  CHECK_THROWS_AS(io::read_pcd(dir.file("nofields.pcd")), ParseError);

  test::write_file(dir.file("noheader.pcd"), "FIELDS x y z intensity\n");
  CHECK_THROWS_AS(io::read_pcd(dir.file("noheader.pcd")), ParseError);

  CHECK_THROWS_AS(io::read_pcd(dir.file("missing.pcd")), IoError);
}

TEST_CASE("wvpc round-trips points and labels bit-exactly") {
  test::TempDir dir("wvpc");
  PointCloud cloud = test::random_cloud(257, 21);
  cloud.labels.assign(cloud.size(), NoiseLabel::NoNoise);
  cloud.labels[13] = NoiseLabel::Noise;

  io::write_wvpc(cloud, dir.file("a.wvpc"));
  const PointCloud back = io::read_wvpc(dir.file("a.wvpc"));
  CHECK(back.points == cloud.points);
  CHECK(back.labels == cloud.labels);

  // Re-encoding the decoded cloud reproduces the payload byte for byte.
  CHECK(io::encode_wvpc(back) == test::read_file(dir.file("a.wvpc")));
}

TEST_CASE("wvpc empty cloud is exactly the 9 documented bytes") {
  const std::string bytes = io::encode_wvpc(PointCloud{});
  REQUIRE(bytes.size() == 9);
  CHECK(bytes.substr(0, 4) == "WVPC");
  CHECK(bytes[4] == 0x01);  // version 1, label bit clear
  CHECK(bytes.substr(5, 4) == std::string(4, '\0'));
  CHECK(io::decode_wvpc(bytes).empty());
}

TEST_CASE("wvpc rejects corruption") {
  PointCloud cloud = test::random_cloud(4, 3);
  std::string bytes = io::encode_wvpc(cloud);

  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(io::decode_wvpc(bad_magic), ParseError);

  CHECK_THROWS_AS(io::decode_wvpc(bytes.substr(0, bytes.size() - 1)), ParseError);
  CHECK_THROWS_AS(io::decode_wvpc(bytes.substr(0, 5)), ParseError);

  std::string bad_version = bytes;
  bad_version[4] = 0x02;
  CHECK_THROWS_AS(io::decode_wvpc(bad_version), ParseError);
}

TEST_CASE("pose json round-trips and validates") {
  Pose pose;
  pose.translation = Eigen::Vector3d(1.0, -2.0, 3.0);
  pose.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(0.5, Eigen::Vector3d::UnitZ()));
  const auto j = io::pose_to_json("v007", pose);
  const auto [id, back] = io::parse_pose(j);
  CHECK(id == "v007");
  CHECK((back.translation - pose.translation).norm() == 0.0);
  CHECK(back.rotation.angularDistance(pose.rotation) < 1e-12);

  auto bad = j;
  bad["rotation"] = {2.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(io::parse_pose(bad), InvalidArgument);
  bad = j;
  bad.erase("translation");
  CHECK_THROWS_AS(io::parse_pose(bad), ParseError);
}
