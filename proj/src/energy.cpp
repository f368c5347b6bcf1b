#include "tensegrity/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tensegrity/errors.hpp"
#include "tensegrity/singularity.hpp"

namespace tensegrity {

namespace {

constexpr double kSimpsonTolerance = 1e-9;
constexpr int kSimpsonMaxLevel = 22;
constexpr double kStabilityStep = 1e-4;
constexpr double kNeutralBand = 1e-7;

double required_alpha_sing(const SegmentGeometry& g) {
  const SingularitySet set = singular_angles(g);
  if (!set.alpha_sing) throw NoSingularity();
  return *set.alpha_sing;
}

double energy_with_rest(const SegmentGeometry& g, const SpringParams& sp, double l0,
                        double alpha) {
  const CableLengths rho = cable_lengths(g, {alpha});
  const double e1 = rho.rho1 - l0;
  const double e2 = rho.rho2 - l0;
  return 0.5 * (sp.k1 * e1 * e1 + sp.k2 * e2 * e2);
}

}  // namespace

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::kStable:
      return "Stable";
    case Stability::kUnstable:
      return "Unstable";
    case Stability::kNeutral:
      return "Neutral";
  }
  return "Neutral";
}

SpringParams validate_springs(const SpringParams& sp) {
  if (!(sp.k1 > 0.0) || !std::isfinite(sp.k1)) throw InvalidSprings("k1 must be positive");
  if (!(sp.k2 > 0.0) || !std::isfinite(sp.k2)) throw InvalidSprings("k2 must be positive");
  if (!(sp.rest_fraction > 0.0 && sp.rest_fraction < 1.0)) throw InvalidFraction(sp.rest_fraction);
  return sp;
}

double rest_length(const SegmentGeometry& g, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw InvalidFraction(fraction);
  return fraction * cable_lengths(g, {0.0}).rho1;
}

double energy(const SegmentGeometry& g, const SpringParams& sp, double alpha) {
  return energy_with_rest(g, sp, rest_length(g, sp.rest_fraction), alpha);
}

double stack_energy(const StackConfig& config, const SpringParams& sp) {
  double sum = 0.0;
  for (int i = 0; i < kStackSize; ++i) sum += energy(config.segments[i], sp, config.states[i].alpha);
  return sum;
}

EnergyProfile energy_profile(const SegmentGeometry& g, const SpringParams& sp, int n) {
  const double reach = required_alpha_sing(g);
  return energy_profile(g, sp, n, -reach, reach);
}

EnergyProfile energy_profile(const SegmentGeometry& g, const SpringParams& sp, int n, double lo,
                             double hi) {
  validate_geometry(g);
  validate_springs(sp);
  if (n < 3) throw std::invalid_argument("energy profile needs at least 3 samples");
  if (!(lo <= hi)) throw std::invalid_argument("energy profile range is reversed");

  const double l0 = rest_length(g, sp.rest_fraction);
  EnergyProfile profile;
  profile.range_lo = lo;
  profile.range_hi = hi;
  profile.alphas.resize(n);
  profile.energies.resize(n);
  for (int i = 0; i < n; ++i) {
    // Endpoints are placed exactly; the middle sample of an odd symmetric
    // range lands on zero.
    double alpha = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    if (i == n - 1) alpha = hi;
    if (2 * i == n - 1 && lo == -hi) alpha = 0.0;
    profile.alphas[i] = alpha;
    profile.energies[i] = energy_with_rest(g, sp, l0, alpha);
  }
  return profile;
}

double total_energy(const SegmentGeometry& g, const SpringParams& sp) {
  const double reach = required_alpha_sing(g);
  return total_energy(g, sp, -reach, reach);
}

double total_energy(const SegmentGeometry& g, const SpringParams& sp, double lo, double hi) {
  validate_geometry(g);
  validate_springs(sp);
  if (lo == hi) return 0.0;
  const double l0 = rest_length(g, sp.rest_fraction);
  auto f = [&](double a) { return energy_with_rest(g, sp, l0, a); };

  // Composite Simpson built from successive trapezoid sums; each halving
  // reuses every previous sample.
  int intervals = 16;
  double h = (hi - lo) / intervals;
  double ends = f(lo) + f(hi);
  double interior = 0.0;
  for (int i = 1; i < intervals; ++i) interior += f(lo + i * h);
  double trapezoid = 0.5 * h * (ends + 2.0 * interior);
  double simpson = 0.0;
  bool have_previous = false;

  for (int level = 0; level < kSimpsonMaxLevel; ++level) {
    double midpoints = 0.0;
    for (int i = 0; i < intervals; ++i) midpoints += f(lo + (i + 0.5) * h);
    const double refined = 0.5 * trapezoid + 0.5 * h * midpoints;
    const double next = (4.0 * refined - trapezoid) / 3.0;
    if (have_previous &&
        std::abs(next - simpson) <= kSimpsonTolerance * std::max(std::abs(next), 1e-300)) {
      return next;
    }
    simpson = next;
    have_previous = true;
    trapezoid = refined;
    intervals *= 2;
    h *= 0.5;
  }
  return simpson;
}

StabilityClass classify_home_stability(const SegmentGeometry& g, const SpringParams& sp) {
  validate_geometry(g);
  validate_springs(sp);
  const double l0 = rest_length(g, sp.rest_fraction);
  auto f = [&](double a) { return energy_with_rest(g, sp, l0, a); };
  const double e0 = f(0.0);
  auto central = [&](double h) { return (f(h) - 2.0 * e0 + f(-h)) / (h * h); };

  const double coarse = central(kStabilityStep);
  const double fine = central(0.5 * kStabilityStep);
  const double curvature = (4.0 * fine - coarse) / 3.0;

  const double band = kNeutralBand * std::max(1.0, e0);
  StabilityClass result;
  result.second_derivative = curvature;
  if (curvature > band) {
    result.stability = Stability::kStable;
  } else if (curvature < -band) {
    result.stability = Stability::kUnstable;
  } else {
    result.stability = Stability::kNeutral;
  }
  return result;
}

}  // namespace tensegrity
