#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tensegrity/energy.hpp"
#include "tensegrity/mechanism.hpp"

namespace tensegrity {

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
  int samples = 2;
  bool open = false;  // open axes sample at half-step offsets and exclude both bounds

  double at(int i) const;
};

// Design box for one segment with h3 = h1 and l2 = lambda * l1.
struct DesignBounds {
  AxisRange l1{0.0, 4.5, 45, true};
  AxisRange h1{0.0, 1.0, 11, false};
  AxisRange h2{0.0, 2.0, 21, false};
  AxisRange lambda{1.0 / 20.0, 1.0, 20, false};

  std::size_t size() const;
};

// Throws std::invalid_argument when an axis has fewer than 2 samples or leaves
// the admissible box.
DesignBounds validate_bounds(const DesignBounds& b);

struct DesignPoint {
  double h1 = 0.0;
  double h2 = 0.0;
  double l1 = 0.0;
  double lambda = 1.0;

  double h3() const { return h1; }
  double l2() const { return lambda * l1; }
  SegmentGeometry geometry() const { return {h1, h2, h1, l1, lambda * l1}; }

  friend bool operator==(const DesignPoint&, const DesignPoint&) = default;
};

// Grid index order: lambda slowest, then h1, h2, l1 fastest.
DesignPoint grid_point(const DesignBounds& b, std::size_t index);
std::vector<DesignPoint> enumerate_grid(const DesignBounds& b);

inline constexpr double kAlphaSingCap = 1.5707963267948966;

struct DesignRecord {
  DesignPoint x;
  bool feasible = false;
  double alpha_sing = 0.0;  // capped at pi/2
  StabilityClass stability;
  double total_energy = 0.0;
  double energy_at_zero = 0.0;
  double energy_at_sing = 0.0;
};

// Travel limit of a design, capped at pi/2; empty for degenerate geometry.
std::optional<double> capped_alpha_sing(const DesignPoint& x);

DesignRecord evaluate_design(const DesignPoint& x, const SpringParams& springs);

// How equally good designs (same alpha_sing) are ranked.
enum class TieBreak {
  // Widest base first, then tallest spine, then lower total energy.
  kLargestBase,
  // Lower total energy first.
  kLowestEnergy,
};

struct OptimizeOptions {
  int workers = 0;  // 0 selects the available hardware parallelism
  TieBreak tie_break = TieBreak::kLargestBase;
};

struct LambdaCurvePoint {
  double lambda = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

struct EnergyCurvePoint {
  double lambda = 0.0;
  double total_energy = 0.0;
};

struct OptimizationReport {
  std::vector<DesignRecord> best;  // one per lambda sample, ascending lambda
  std::vector<LambdaCurvePoint> lambda_curve;
  std::vector<EnergyCurvePoint> energy_curve;
  double max_alpha_sing = 0.0;
  std::size_t evaluated = 0;
  std::size_t infeasible = 0;
};

// Exhaustive search maximizing alpha_sing per lambda sample. Throws EmptyGrid
// when no grid point is feasible.
OptimizationReport optimize(const DesignBounds& bounds, const SpringParams& springs,
                            const OptimizeOptions& options = {});

}  // namespace tensegrity
