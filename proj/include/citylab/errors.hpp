#pragma once

#include <stdexcept>
#include <string>

namespace citylab {

// Error taxonomy shared by every module. The CLI maps these onto exit codes,
// so new failure kinds should reuse one of the existing categories.

// Invalid parameter or configuration supplied by the caller.
struct ArgumentError : std::invalid_argument {
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input data violates a domain precondition (value out of range, center
// outside raster, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/profile dimensions do not line up. Message lists both shapes.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file content. Message names the offending field.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation called in the wrong order (backward without forward, ...).
struct StateError : std::runtime_error {
  explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checkpoint file rejected; message names the bad field.
struct CheckpointError : std::runtime_error {
  explicit CheckpointError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure while optimizing (non-finite loss, ...).
struct TrainingError : std::runtime_error {
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

// A statistical test could not be carried out on the given data.
struct StatTestError : std::runtime_error {
  explicit StatTestError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace citylab
