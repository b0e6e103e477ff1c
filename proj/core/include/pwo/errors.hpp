#pragma once

#include <stdexcept>
#include <string>

namespace pwo {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition or invariant violation on caller-supplied values.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Euler extraction attempted too close to gimbal lock.
class DegenerateOrientationError : public Error {
 public:
  using Error::Error;
};

// No (or too little) valid photometric overlap between frames.
class DegenerateOverlapError : public Error {
 public:
  using Error::Error;
};

// Point configuration too degenerate for rigid alignment.
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

// A camera ray misses every surface of a synthetic scene.
class InvalidSceneError : public Error {
 public:
  using Error::Error;
};

// Input file deviates from the documented grammar. Message carries the
// location (byte offset or line number).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Input file is well-formed but uses a feature we do not support.
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace pwo
