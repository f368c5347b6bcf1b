#pragma once

#include <stdexcept>
#include <string>

namespace tensegrity {

// A SegmentGeometry field violates its domain (e.g. a zero spine length).
class InvalidGeometry : public std::invalid_argument {
 public:
  explicit InvalidGeometry(std::string field)
      : std::invalid_argument("invalid geometry: " + field), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class InvalidRatio : public std::invalid_argument {
 public:
  explicit InvalidRatio(double value)
      : std::invalid_argument("taper ratio must lie in (0, 1], got " + std::to_string(value)) {}
};

class InvalidFraction : public std::invalid_argument {
 public:
  explicit InvalidFraction(double value)
      : std::invalid_argument("rest-length fraction must lie in (0, 1), got " +
                              std::to_string(value)) {}
};

class InvalidSprings : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial is identically zero after trimming.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The geometry has no singular configuration, so no travel range is defined.
class NoSingularity : public std::domain_error {
 public:
  NoSingularity() : std::domain_error("geometry has no singular configuration") {}
};

class EmptyGrid : public std::runtime_error {
 public:
  EmptyGrid() : std::runtime_error("design grid has no feasible point") {}
};

}  // namespace tensegrity
