#pragma once

#include <string_view>
#include <vector>

#include "tensegrity/mechanism.hpp"

namespace tensegrity {

// Linear springs in parallel with the two cables. The shared rest length is
// rest_fraction times the home-pose cable length of the segment it acts on.
struct SpringParams {
  double k1 = 1.0;
  double k2 = 1.0;
  double rest_fraction = 0.4;
};

SpringParams validate_springs(const SpringParams& sp);

struct EnergyProfile {
  std::vector<double> alphas;
  std::vector<double> energies;
  double range_lo = 0.0;
  double range_hi = 0.0;
};

enum class Stability { kStable, kUnstable, kNeutral };

std::string_view to_string(Stability s);

struct StabilityClass {
  Stability stability = Stability::kNeutral;
  double second_derivative = 0.0;  // d2E/dalpha2 at the home pose
};

// fraction * rho1 at alpha = 0. Throws InvalidFraction outside (0, 1).
double rest_length(const SegmentGeometry& g, double fraction);

// Spring energy 1/2 (k1 (rho1 - l0)^2 + k2 (rho2 - l0)^2).
double energy(const SegmentGeometry& g, const SpringParams& sp, double alpha);

// Sum of segment energies; each segment uses its own (scaled) rest length.
double stack_energy(const StackConfig& config, const SpringParams& sp);

// n uniform samples over [-alpha_sing, alpha_sing]. Throws NoSingularity
// when the geometry has none.
EnergyProfile energy_profile(const SegmentGeometry& g, const SpringParams& sp, int n);
EnergyProfile energy_profile(const SegmentGeometry& g, const SpringParams& sp, int n, double lo,
                             double hi);

// Integral of the energy over [-alpha_sing, alpha_sing].
double total_energy(const SegmentGeometry& g, const SpringParams& sp);
double total_energy(const SegmentGeometry& g, const SpringParams& sp, double lo, double hi);

StabilityClass classify_home_stability(const SegmentGeometry& g, const SpringParams& sp);

}  // namespace tensegrity
