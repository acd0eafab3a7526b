// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_IO_PCD_IO_HPP
#define WVOX_IO_PCD_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox::io {

namespace detail {

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline float parse_float(const std::string& tok, const std::string& path, std::size_t line_no) {
  float v = 0.0f;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(path + ":" + std::to_string(line_no) + ": non-numeric value '" + tok + "'");
  return v;
}

}  // namespace detail

/// Reads the ASCII subset of the PCD format. FIELDS must contain x, y, z
/// and intensity (any order, extra fields ignored). Intensities on a
/// 0-255 scale are detected by max > 1 and normalized to [0, 1].
inline PointCloud read_pcd(const std::string& path) {
  std::ifstream fs(path);
  if (!fs) throw IoError("cannot open " + path);

  std::vector<std::string> fields;
  long declared_points = -1;
  bool data_seen = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(fs, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    tag = detail::lower(tag);
    if (tag == "fields") {
      std::string f;
      while (ss >> f) fields.push_back(detail::lower(f));
    } else if (tag == "points") {
      if (!(ss >> declared_points) || declared_points < 0)
        throw ParseError(path + ":" + std::to_string(line_no) + ": malformed POINTS line");
    } else if (tag == "data") {
      std::string kind;
      ss >> kind;
      if (detail::lower(kind) != "ascii")
        throw ParseError(path + ":" + std::to_string(line_no) + ": only DATA ascii is supported");
      data_seen = true;
      break;
    } else if (tag == "version" || tag == "size" || tag == "type" || tag == "count" ||
               tag == "width" || tag == "height" || tag == "viewpoint") {
      continue;  // accepted, unused
    } else {
      throw ParseError(path + ":" + std::to_string(line_no) + ": unknown header tag '" + tag + "'");
    }
  }
  if (!data_seen) throw ParseError(path + ": missing DATA line in header");

  auto index_of = [&](const char* name) {
    auto it = std::find(fields.begin(), fields.end(), name);
    if (it == fields.end())
      throw ParseError(path + ": FIELDS is missing required field '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - fields.begin());
  };
  const std::size_t ix = index_of("x"), iy = index_of("y"), iz = index_of("z"),
                    ii = index_of("intensity");

  PointCloud cloud;
  std::vector<std::string> toks;
  while (std::getline(fs, line)) {
    ++line_no;
    if (line.empty()) continue;
    toks.clear();
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.size() != fields.size())
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(fields.size()) + " values, got " + std::to_string(toks.size()));
    Point p;
    p.x = detail::parse_float(toks[ix], path, line_no);
    p.y = detail::parse_float(toks[iy], path, line_no);
    p.z = detail::parse_float(toks[iz], path, line_no);
    p.intensity = detail::parse_float(toks[ii], path, line_no);
    cloud.points.push_back(p);
  }
  if (declared_points >= 0 && static_cast<std::size_t>(declared_points) != cloud.points.size())
    throw ParseError(path + ": POINTS declares " + std::to_string(declared_points) + " but " +
                     std::to_string(cloud.points.size()) + " rows found");

  float max_i = 0.0f;
  for (const Point& p : cloud.points) max_i = std::max(max_i, p.intensity);
  const float scale = max_i > 1.0f ? 255.0f : 1.0f;
  for (Point& p : cloud.points)
    p.intensity = std::clamp(p.intensity / scale, 0.0f, 1.0f);
  return cloud;
}

}  // namespace wvox::io

#endif
