#include "tensegrity/mechanism.hpp"

#include <algorithm>

#include "tensegrity/errors.hpp"

namespace tensegrity {

double normalize_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

Vec2 Frame2D::apply(Vec2 local) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {origin.x + c * local.x - s * local.y, origin.y + s * local.x + c * local.y};
}

SegmentGeometry validate_geometry(const SegmentGeometry& g) {
  auto check = [](double value, bool allow_zero, const char* field) {
    if (!std::isfinite(value) || value < 0.0 || (!allow_zero && value == 0.0)) {
      throw InvalidGeometry(field);
    }
  };
  check(g.h1, true, "h1");
  check(g.h2, false, "h2");
  check(g.h3, true, "h3");
  check(g.l1, false, "l1");
  check(g.l2, false, "l2");
  return g;
}

SegmentPose segment_points(const SegmentGeometry& g, SegmentState s) {
  const double sa = std::sin(s.alpha);
  const double ca = std::cos(s.alpha);
  const double s2a = std::sin(2.0 * s.alpha);
  const double c2a = std::cos(2.0 * s.alpha);
  const double cc = ca * ca;

  SegmentPose pose;
  pose.a1 = {-g.l1, 0.0};
  pose.a2 = {g.l1, 0.0};
  pose.b0 = {0.0, g.h1};
  pose.c0 = {-g.h2 * sa, g.h1 + g.h2 * ca};
  pose.d0 = {-g.h2 * sa - g.h3 * s2a, g.h1 + g.h2 * ca + g.h3 * c2a};
  pose.d1 = {(-2.0 * g.h3 * ca - g.h2) * sa - 2.0 * g.l2 * cc + g.l2,
             2.0 * g.h3 * cc + (-2.0 * g.l2 * sa + g.h2) * ca + g.h1 - g.h3};
  pose.d2 = {(-2.0 * g.h3 * ca - g.h2) * sa + 2.0 * g.l2 * cc - g.l2,
             2.0 * g.h3 * cc + (2.0 * g.l2 * sa + g.h2) * ca + g.h1 - g.h3};
  return pose;
}

CableLengths cable_lengths(const SegmentGeometry& g, SegmentState s) {
  const SegmentPose pose = segment_points(g, s);
  return {(pose.a1 - pose.d1).norm(), (pose.a2 - pose.d2).norm()};
}

double singularity_condition(const SegmentGeometry& g, double alpha) {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double s2 = s * s;
  const double c2 = c * c;
  const double s3 = s2 * s;
  const double c3 = c2 * c;
  const auto [h1, h2, h3, l1, l2] = g;
  const double h33 = h3 * h3;
  const double l22 = l2 * l2;

  return -8.0 * h33 * c3 * s + 8.0 * h33 * c * s - 8.0 * l22 * c3 * s + 8.0 * l22 * c * s -
         4.0 * h3 * s * c2 * h2 - 4.0 * h3 * s3 * h2 - 4.0 * h3 * c2 * l1 + 4.0 * h3 * s2 * l1 -
         4.0 * l2 * c2 * h1 + 4.0 * l2 * s2 * h1 - 8.0 * h33 * s3 * c - 2.0 * h2 * c * l2 -
         2.0 * h2 * c * l1 + 8.0 * l2 * c * l1 * s - 8.0 * l22 * s3 * c -
         8.0 * h3 * c * h1 * s - 2.0 * h2 * s * h1 + 2.0 * h2 * s * h3;
}

double condition_scale(const SegmentGeometry& g) {
  const double m = std::max({g.h1, g.h2, g.h3, g.l1, g.l2});
  return m * m;
}

StackConfig tapered_stack(const SegmentGeometry& base, double lambda,
                          const std::array<double, kStackSize>& alphas) {
  validate_geometry(base);
  if (!(lambda > 0.0 && lambda <= 1.0)) throw InvalidRatio(lambda);

  StackConfig config;
  double factor = 1.0;
  for (int i = 0; i < kStackSize; ++i) {
    config.segments[i] = base.scaled(factor);
    config.states[i].alpha = alphas[i];
    factor *= lambda;
  }
  return config;
}

std::array<Frame2D, kStackSize> stack_forward(const StackConfig& config) {
  std::array<Frame2D, kStackSize> frames;
  Frame2D parent;
  double cumulative = 0.0;
  for (int i = 0; i < kStackSize; ++i) {
    const SegmentPose pose = segment_points(config.segments[i], config.states[i]);
    cumulative += 2.0 * config.states[i].alpha;
    frames[i].origin = parent.apply(pose.d0);
    frames[i].theta = normalize_angle(cumulative);
    parent = frames[i];
  }
  return frames;
}

}  // namespace tensegrity
