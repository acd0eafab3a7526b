// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_WIRE_BITSTREAM_HPP
#define WVOX_WIRE_BITSTREAM_HPP

#include <cstdint>
#include <string>

#include "wvox/error.hpp"

namespace wvox::wire {

/// Big-endian (MSB-first) bit packer. finish() pads the final byte
/// with zero bits.
class BitWriter {
public:
  void put(std::uint32_t value, unsigned bits) {
    if (bits > 32) throw InvalidArgument("BitWriter: width > 32");
    if (bits < 32 && (value >> bits) != 0)
      throw InvalidArgument("BitWriter: value does not fit in width");
    for (unsigned i = bits; i-- > 0;) {
      cur_ = static_cast<std::uint8_t>((cur_ << 1) | ((value >> i) & 1u));
      if (++filled_ == 8) {
        bytes_.push_back(static_cast<char>(cur_));
        cur_ = 0;
        filled_ = 0;
      }
    }
  }

  std::string finish() {
    if (filled_ > 0) {
      bytes_.push_back(static_cast<char>(cur_ << (8 - filled_)));
      cur_ = 0;
      filled_ = 0;
    }
    return std::move(bytes_);
  }

private:
  std::string bytes_;
  std::uint8_t cur_ = 0;
  unsigned filled_ = 0;
};

/// Matching MSB-first reader over a byte range.
class BitReader {
public:
  BitReader(const char* data, std::size_t size) : data_(data), size_bits_(size * 8) {}

  std::uint32_t get(unsigned bits) {
    if (bits > 32) throw InvalidArgument("BitReader: width > 32");
    if (pos_ + bits > size_bits_) throw ParseError("BitReader: read past end of payload");
    std::uint32_t v = 0;
    for (unsigned i = 0; i < bits; ++i, ++pos_) {
      const std::uint8_t byte = static_cast<std::uint8_t>(data_[pos_ >> 3]);
      v = (v << 1) | ((byte >> (7 - (pos_ & 7))) & 1u);
    }
    return v;
  }

  [[nodiscard]] std::size_t bits_left() const { return size_bits_ - pos_; }

private:
  const char* data_;
  std::size_t size_bits_;
  std::size_t pos_ = 0;
};

}  // namespace wvox::wire

#endif
