// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_IO_WVPC_IO_HPP
#define WVOX_IO_WVPC_IO_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "wvox/error.hpp"
#include "wvox/point_cloud.hpp"

namespace wvox::io {

// WVPC binary layout (all little-endian), documented in docs/FORMATS.md:
//   bytes 0..3   magic "WVPC"
//   byte  4      bits 0-3 format version (1), bit 4 label flag, bits 5-7 zero
//   bytes 5..8   point count, u32
//   then count records of 4 f32 (x, y, z, intensity)
//   then, if the label flag is set, count bytes of labels (0 or 1)

namespace detail {

inline constexpr char kWvpcMagic[4] = {'W', 'V', 'P', 'C'};
inline constexpr std::uint8_t kWvpcVersion = 1;
inline constexpr std::uint8_t kWvpcLabelBit = 0x10;

static_assert(std::endian::native == std::endian::little,
              "WVPC I/O assumes a little-endian host");

inline void put_u32(std::string& out, std::uint32_t v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  out.append(buf, 4);
}

inline void put_f32(std::string& out, float v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  out.append(buf, 4);
}

}  // namespace detail

/// Serializes a cloud to the WVPC byte layout. Labels are written iff
/// the cloud carries them. Metadata (frame/vehicle ids, timestamp) is
/// dataset-layout context and is not part of the format.
inline std::string encode_wvpc(const PointCloud& cloud) {
  cloud.validate();
  if (cloud.size() > 0xffffffffULL) throw InvalidArgument("encode_wvpc: too many points for u32 count");
  std::string out;
  out.reserve(9 + cloud.size() * 17);
  out.append(detail::kWvpcMagic, 4);
  std::uint8_t vbyte = detail::kWvpcVersion;
  if (cloud.has_labels()) vbyte |= detail::kWvpcLabelBit;
  out.push_back(static_cast<char>(vbyte));
  detail::put_u32(out, static_cast<std::uint32_t>(cloud.size()));
  for (const Point& p : cloud.points) {
    detail::put_f32(out, p.x);
    detail::put_f32(out, p.y);
    detail::put_f32(out, p.z);
    detail::put_f32(out, p.intensity);
  }
  if (cloud.has_labels())
    for (NoiseLabel l : cloud.labels) out.push_back(static_cast<char>(l));
  return out;
}

inline PointCloud decode_wvpc(const std::string& bytes, const std::string& origin = "<memory>") {
  if (bytes.size() < 9) throw ParseError(origin + ": truncated WVPC header");
  if (std::memcmp(bytes.data(), detail::kWvpcMagic, 4) != 0)
    throw ParseError(origin + ": bad WVPC magic");
  const auto vbyte = static_cast<std::uint8_t>(bytes[4]);
  if ((vbyte & 0x0f) != detail::kWvpcVersion)
    throw ParseError(origin + ": unsupported WVPC version " + std::to_string(vbyte & 0x0f));
  if ((vbyte & ~(0x0f | detail::kWvpcLabelBit)) != 0)
    throw ParseError(origin + ": reserved WVPC flag bits set");
  const bool has_labels = (vbyte & detail::kWvpcLabelBit) != 0;

  std::uint32_t count = 0;
  std::memcpy(&count, bytes.data() + 5, 4);
  const std::size_t expect = 9 + std::size_t(count) * 16 + (has_labels ? count : 0);
  if (bytes.size() != expect)
    throw ParseError(origin + ": WVPC payload is " + std::to_string(bytes.size()) +
                     " bytes, expected " + std::to_string(expect));

  PointCloud cloud;
  cloud.points.resize(count);
  std::memcpy(cloud.points.data(), bytes.data() + 9, std::size_t(count) * 16);
  static_assert(sizeof(Point) == 16, "Point must be 4 packed f32");
  if (has_labels) {
    cloud.labels.resize(count);
    const char* src = bytes.data() + 9 + std::size_t(count) * 16;
    for (std::uint32_t i = 0; i < count; ++i) {
      const auto b = static_cast<std::uint8_t>(src[i]);
      if (b > 1) throw ParseError(origin + ": WVPC label byte out of range");
      cloud.labels[i] = static_cast<NoiseLabel>(b);
    }
  }
  cloud.validate();
  return cloud;
}

inline void write_wvpc(const PointCloud& cloud, const std::string& path) {
  std::ofstream fs(path, std::ios::binary | std::ios::trunc);
  if (!fs) throw IoError("cannot open " + path + " for writing");
  const std::string bytes = encode_wvpc(cloud);
  fs.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!fs) throw IoError("short write to " + path);
}

inline PointCloud read_wvpc(const std::string& path) {
  std::ifstream fs(path, std::ios::binary);
  if (!fs) throw IoError("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(fs)), std::istreambuf_iterator<char>());
  return decode_wvpc(bytes, path);
}

}  // namespace wvox::io

#endif
