// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WIRE_CODEC_HPP
#define WVOX_WIRE_CODEC_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>

#include "wvox/error.hpp"
#include "wvox/voxel/grid.hpp"
#include "wvox/wire/bitstream.hpp"

namespace wvox::wire {

// SVGM message layout (51-byte header, then packed coordinates),
// documented byte-exact in docs/FORMATS.md:
//   bytes  0..3   magic "SVGM"
//   byte   4      version, u8 = 1
//   bytes  5..28  grid origin, 3 x f64 LE
//   bytes 29..40  voxel size, 3 x f32 LE
//   bytes 41..46  grid dims, 3 x u16 LE
//   bytes 47..50  voxel count, u32 LE
//   payload       per voxel ix|iy|iz, ceil(log2(dim)) bits each,
//                 MSB-first, final byte zero-padded
// Only coordinates are transmitted; labels and features never enter
// the message.

namespace detail {

inline constexpr char kSvgmMagic[4] = {'S', 'V', 'G', 'M'};
inline constexpr std::uint8_t kSvgmVersion = 1;
inline constexpr std::size_t kHeaderBytes = 51;

static_assert(std::endian::native == std::endian::little,
              "SVGM I/O assumes a little-endian host");

template <typename T>
void put_raw(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T get_raw(const char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

}  // namespace detail

/// Bits needed for a coordinate on an axis with `dim` cells; a
/// single-cell axis needs none.
inline unsigned coord_bits(std::uint32_t dim) {
  if (dim < 1) throw InvalidArgument("coord_bits: dim must be >= 1");
  return dim == 1 ? 0u : static_cast<unsigned>(std::bit_width(dim - 1));
}

inline unsigned bits_per_voxel(const GridSpec& spec) {
  return coord_bits(spec.dims[0]) + coord_bits(spec.dims[1]) + coord_bits(spec.dims[2]);
}

/// Exact encoded message size in bits for a grid of `count` voxels over
/// `spec`: the 408-bit header plus the byte-padded coordinate payload.
inline std::uint64_t message_bits(const GridSpec& spec, std::uint64_t count) {
  const std::uint64_t payload_bits = std::uint64_t(bits_per_voxel(spec)) * count;
  return detail::kHeaderBytes * 8 + (payload_bits + 7) / 8 * 8;
}

inline std::uint64_t message_bits(const SparseVoxelGrid& grid) {
  return message_bits(grid.spec, grid.size());
}

/// Serializes a grid into an SVGM message. Features and labels are
/// deliberately omitted from the wire.
inline std::string encode(const SparseVoxelGrid& grid) {
  grid.validate();
  for (int a = 0; a < 3; ++a)
    if (grid.spec.dims[a] > 0xffff)
      throw InvalidArgument("encode: grid dims exceed u16 on the wire");
  if (grid.size() > 0xffffffffULL) throw InvalidArgument("encode: voxel count exceeds u32");

  std::string out;
  out.reserve(detail::kHeaderBytes + grid.size() * 4);
  out.append(detail::kSvgmMagic, 4);
  out.push_back(static_cast<char>(detail::kSvgmVersion));
  for (int a = 0; a < 3; ++a) detail::put_raw(out, static_cast<double>(grid.spec.origin[a]));
  for (int a = 0; a < 3; ++a) detail::put_raw(out, grid.spec.voxel_size[a]);
  for (int a = 0; a < 3; ++a) detail::put_raw(out, static_cast<std::uint16_t>(grid.spec.dims[a]));
  detail::put_raw(out, static_cast<std::uint32_t>(grid.size()));

  const unsigned bx = coord_bits(grid.spec.dims[0]);
  const unsigned by = coord_bits(grid.spec.dims[1]);
  const unsigned bz = coord_bits(grid.spec.dims[2]);
  BitWriter bits;
  for (const VoxelCoord& c : grid.coords) {
    bits.put(c.ix, bx);
    bits.put(c.iy, by);
    bits.put(c.iz, bz);
  }
  out += bits.finish();
  return out;
}

/// Parses and validates an SVGM message. Rejects bad magic or version,
/// payload length inconsistent with the voxel count, out-of-range
/// coordinates, and unsorted or duplicate coordinates.
inline SparseVoxelGrid decode(const std::string& bytes, const std::string& origin = "<memory>") {
  if (bytes.size() < detail::kHeaderBytes)
    throw ParseError(origin + ": truncated SVGM header");
  if (std::memcmp(bytes.data(), detail::kSvgmMagic, 4) != 0)
    throw ParseError(origin + ": bad SVGM magic");
  if (static_cast<std::uint8_t>(bytes[4]) != detail::kSvgmVersion)
    throw ParseError(origin + ": unsupported SVGM version");

  SparseVoxelGrid grid;
  const char* p = bytes.data() + 5;
  for (int a = 0; a < 3; ++a, p += 8) grid.spec.origin[a] = detail::get_raw<double>(p);
  for (int a = 0; a < 3; ++a, p += 4) grid.spec.voxel_size[a] = detail::get_raw<float>(p);
  for (int a = 0; a < 3; ++a, p += 2) grid.spec.dims[a] = detail::get_raw<std::uint16_t>(p);
  const auto count = detail::get_raw<std::uint32_t>(p);
  grid.spec.validate();

  const std::uint64_t expect_bytes =
      detail::kHeaderBytes + (std::uint64_t(bits_per_voxel(grid.spec)) * count + 7) / 8;
  if (bytes.size() != expect_bytes)
    throw ParseError(origin + ": SVGM payload is " + std::to_string(bytes.size()) +
                     " bytes, expected " + std::to_string(expect_bytes));

  const unsigned bx = coord_bits(grid.spec.dims[0]);
  const unsigned by = coord_bits(grid.spec.dims[1]);
  const unsigned bz = coord_bits(grid.spec.dims[2]);
  BitReader bits(bytes.data() + detail::kHeaderBytes, bytes.size() - detail::kHeaderBytes);
  grid.coords.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    VoxelCoord c{bits.get(bx), bits.get(by), bits.get(bz)};
    if (c.ix >= grid.spec.dims[0] || c.iy >= grid.spec.dims[1] || c.iz >= grid.spec.dims[2])
      throw ParseError(origin + ": SVGM coordinate outside grid dims");
    if (i > 0 && !(grid.coords.back() < c))
      throw ParseError(origin + ": SVGM coordinates unsorted or duplicated");
    grid.coords.push_back(c);
  }
  return grid;
}

}  // namespace wvox::wire

#endif
