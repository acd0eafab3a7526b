// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_ERROR_HPP
#define WVOX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wvox {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (PCD, WVPC, SVGM, JSON). Messages carry the
/// offending path, line or byte offset where known.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Parameter or config value outside its documented domain.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace wvox

#endif
