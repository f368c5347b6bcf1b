#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace tensegrity {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2, Vec2) = default;

  double norm() const { return std::hypot(x, y); }
};

// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

// Lengths of one trapezoidal segment. The spine runs A0-B0-C0-D0 with link
// lengths h1, h2, h3; the base plate has half-width l1 and the moving
// platform half-width l2.
struct SegmentGeometry {
  double h1 = 1.0;
  double h2 = 1.0;
  double h3 = 1.0;
  double l1 = 1.0;
  double l2 = 1.0;

  // Platform-to-base width ratio.
  double lambda() const { return l2 / l1; }
  SegmentGeometry scaled(double factor) const {
    return {factor * h1, factor * h2, factor * h3, factor * l1, factor * l2};
  }

  friend bool operator==(const SegmentGeometry&, const SegmentGeometry&) = default;
};

// Both revolute joints of a segment turn by the same angle alpha.
struct SegmentState {
  double alpha = 0.0;
};

// Points of one segment in its base frame; A0 is the origin.
struct SegmentPose {
  Vec2 a1, a2;
  Vec2 b0, c0, d0;
  Vec2 d1, d2;
};

struct CableLengths {
  double rho1 = 0.0;
  double rho2 = 0.0;
};

struct Frame2D {
  Vec2 origin;
  double theta = 0.0;

  // Maps a point expressed in this frame into the parent frame.
  Vec2 apply(Vec2 local) const;
};

inline constexpr int kStackSize = 3;

struct StackConfig {
  std::array<SegmentGeometry, kStackSize> segments;
  std::array<SegmentState, kStackSize> states;
};

// Throws InvalidGeometry naming the first violated field.
SegmentGeometry validate_geometry(const SegmentGeometry& g);

SegmentPose segment_points(const SegmentGeometry& g, SegmentState s);

CableLengths cable_lengths(const SegmentGeometry& g, SegmentState s);

// d(rho1^2)/d(alpha) for the first closed loop A1 A0 B0 C0 D0 D1. Zero at a
// parallel singularity of that loop.
double singularity_condition(const SegmentGeometry& g, double alpha);

// Natural magnitude of singularity_condition for g: the squared largest length.
double condition_scale(const SegmentGeometry& g);

// Segment i+1 is segment i scaled by lambda; lambda must lie in (0, 1].
StackConfig tapered_stack(const SegmentGeometry& base, double lambda,
                          const std::array<double, kStackSize>& alphas);

// Platform frame of every segment expressed in the base frame. Each segment
// tilts its platform by 2 alpha and the next segment is mounted on it.
std::array<Frame2D, kStackSize> stack_forward(const StackConfig& config);

}  // namespace tensegrity
