#pragma once

#include <stdexcept>

namespace avsi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad field values, malformed JSON, violated config invariants.
struct ConfigError : Error {
  using Error::Error;
};

// Filesystem and codec failures.
struct IoError : Error {
  using Error::Error;
};

// Two raster operands (or an expected size) disagree on width/height.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Degenerate geometric input: collinear points, zero-length radial, etc.
struct GeometryError : Error {
  using Error::Error;
};

// Unresolvable plan: ambiguous grasp, no staging direction.
struct PlanningError : Error {
  using Error::Error;
};

// ransac_circle could not produce a result.
struct FitError : Error {
  using Error::Error;
};

// No rim sample landed inside the image.
struct RenderError : Error {
  using Error::Error;
};

}  // namespace avsi
