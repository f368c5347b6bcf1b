#pragma once

#include <optional>
#include <vector>

#include "tensegrity/mechanism.hpp"

namespace tensegrity {

struct SingularAngle {
  double angle = 0.0;     // in (-pi, pi]
  double residual = 0.0;  // |singularity_condition| at angle (mirrored for loop 2)
  bool tangential = false;
};

// Singular configurations of both closed loops of one segment. Loop 1 is
// A1 A0 B0 C0 D0 D1, loop 2 is its mirror A2 A0 B0 C0 D0 D2.
struct SingularitySet {
  std::vector<SingularAngle> loop1;  // sorted by angle
  std::vector<SingularAngle> loop2;  // sorted by angle
  // Smallest |angle| over both loops; empty when neither loop is singular.
  std::optional<double> alpha_sing;

  std::vector<double> loop1_angles() const;
  std::vector<double> loop2_angles() const;
};

SingularitySet singular_angles(const SegmentGeometry& g);

// Angles inside which singularity_condition changes sign. hi may exceed pi
// for the bracket that wraps around from pi to -pi.
struct AngleBracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Brute-force sign scan of singularity_condition over n uniform samples of
// (-pi, pi]. Requires n >= 1000.
std::vector<AngleBracket> scan_singularities(const SegmentGeometry& g, int n);

}  // namespace tensegrity
