#include "tensegrity/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tensegrity/errors.hpp"
#include "tensegrity/polyroots.hpp"

namespace tensegrity {

namespace {

constexpr double kPi = std::numbers::pi;
// Relative tolerance for the direct check at alpha = pi, where the half-angle
// parameter is unbounded.
constexpr double kPiCheckTolerance = 1e-12;
constexpr double kAngleMergeTolerance = 1e-8;

double angle_distance(double a, double b) { return std::abs(normalize_angle(a - b)); }

std::vector<double> angles_of(const std::vector<SingularAngle>& loop) {
  std::vector<double> out;
  out.reserve(loop.size());
  for (const SingularAngle& s : loop) out.push_back(s.angle);
  return out;
}

void add_angle(std::vector<SingularAngle>& loop, SingularAngle candidate) {
  for (SingularAngle& existing : loop) {
    if (angle_distance(existing.angle, candidate.angle) <= kAngleMergeTolerance) {
      existing.tangential = existing.tangential || candidate.tangential;
      if (candidate.residual < existing.residual) {
        existing.angle = candidate.angle;
        existing.residual = candidate.residual;
      }
      return;
    }
  }
  loop.push_back(candidate);
}

}  // namespace

std::vector<double> SingularitySet::loop1_angles() const { return angles_of(loop1); }
std::vector<double> SingularitySet::loop2_angles() const { return angles_of(loop2); }

SingularitySet singular_angles(const SegmentGeometry& g) {
  validate_geometry(g);
  const Polynomial p = half_angle_polynomial(g);

  std::vector<SingularAngle> loop1;
  auto add_root = [&](double alpha, bool tangential) {
    alpha = normalize_angle(alpha);
    add_angle(loop1, {alpha, std::abs(singularity_condition(g, alpha)), tangential});
  };

  // |t| <= 1 covers [-pi/2, pi/2]; the reversed polynomial in u = 1/t covers
  // the rest without evaluating p at huge arguments.
  for (const Root& r : real_roots(p, -1.0, 1.0).roots) {
    add_root(2.0 * std::atan(r.value), r.tangential);
  }
  const Polynomial q = p.reversed();
  if (q.degree() > 0) {
    for (const Root& r : real_roots(q, -1.0, 1.0).roots) {
      if (r.value == 0.0) continue;  // alpha = pi, checked directly below
      const double alpha = std::copysign(kPi, r.value) - 2.0 * std::atan(r.value);
      add_root(alpha, r.tangential);
    }
  }
  if (std::abs(singularity_condition(g, kPi)) <= kPiCheckTolerance * condition_scale(g)) {
    add_root(kPi, false);
  }

  SingularitySet set;
  std::sort(loop1.begin(), loop1.end(),
            [](const SingularAngle& a, const SingularAngle& b) { return a.angle < b.angle; });
  set.loop1 = loop1;
  // The second loop is the mirror image of the first: alpha -> -alpha.
  for (const SingularAngle& s : loop1) set.loop2.push_back({normalize_angle(-s.angle), s.residual, s.tangential});
  std::sort(set.loop2.begin(), set.loop2.end(),
            [](const SingularAngle& a, const SingularAngle& b) { return a.angle < b.angle; });

  for (const SingularAngle& s : set.loop1) {
    const double magnitude = std::abs(s.angle);
    if (!set.alpha_sing || magnitude < *set.alpha_sing) set.alpha_sing = magnitude;
  }
  return set;
}

std::vector<AngleBracket> scan_singularities(const SegmentGeometry& g, int n) {
  if (n < 1000) throw std::invalid_argument("scan_singularities requires n >= 1000");
  const double step = 2.0 * kPi / n;
  auto sample = [&](long i) { return -kPi + step * static_cast<double>(i + 1); };

  std::vector<AngleBracket> brackets;
  int last_sign = 0;
  double last_angle = 0.0;
  int first_sign = 0;
  double first_angle = 0.0;
  for (long i = 0; i < n; ++i) {
    const double alpha = sample(i);
    const double value = singularity_condition(g, alpha);
    const int sign = (value > 0.0) - (value < 0.0);
    if (sign == 0) continue;
    if (first_sign == 0) {
      first_sign = sign;
      first_angle = alpha;
    }
    if (last_sign != 0 && sign != last_sign) brackets.push_back({last_angle, alpha});
    last_sign = sign;
    last_angle = alpha;
  }
  // Periodic wrap from the last sample (pi) back to the first.
  if (first_sign != 0 && last_sign != first_sign) {
    brackets.push_back({last_angle, first_angle + 2.0 * kPi});
  }
  return brackets;
}

}  // namespace tensegrity
