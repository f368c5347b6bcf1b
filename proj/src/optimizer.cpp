#include "tensegrity/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "tensegrity/errors.hpp"
#include "tensegrity/singularity.hpp"

namespace tensegrity {

namespace {

// Designs whose alpha_sing lies this close to the per-lambda maximum tie.
constexpr double kTieTolerance = 1e-9;

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(i) for i in [0, n). Each index is owned by exactly one worker, so
// results written by index do not depend on the worker count.
template <typename Body>
void parallel_for(std::size_t n, int workers, Body body) {
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (count <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    threads.emplace_back([=, &body] {
      for (std::size_t i = w; i < n; i += count) body(i);
    });
  }
}

void check_axis(const AxisRange& axis, double lo, double hi, const char* name) {
  if (axis.samples < 2) {
    throw std::invalid_argument(std::string("resolution of ") + name + " must be at least 2");
  }
  if (!(axis.lo < axis.hi) || axis.lo < lo || axis.hi > hi) {
    throw std::invalid_argument(std::string("bounds of ") + name + " leave the design box");
  }
}

auto lexicographic_key(const DesignPoint& x) {
  return std::make_tuple(x.h1, x.h2, x.h3(), x.l1, x.lambda);
}

bool better(const DesignRecord& a, const DesignRecord& b, TieBreak rule) {
  if (rule == TieBreak::kLargestBase) {
    if (a.x.l1 != b.x.l1) return a.x.l1 > b.x.l1;
    if (a.x.h2 != b.x.h2) return a.x.h2 > b.x.h2;
  }
  if (a.total_energy != b.total_energy) return a.total_energy < b.total_energy;
  return lexicographic_key(a.x) < lexicographic_key(b.x);
}

}  // namespace

double AxisRange::at(int i) const {
  if (open) return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / samples;
  if (i == samples - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
}

std::size_t DesignBounds::size() const {
  return static_cast<std::size_t>(l1.samples) * h1.samples * h2.samples * lambda.samples;
}

DesignBounds validate_bounds(const DesignBounds& b) {
  check_axis(b.l1, 0.0, 4.5, "l1");
  check_axis(b.h1, 0.0, 1.0, "h1");
  check_axis(b.h2, 0.0, 2.0, "h2");
  check_axis(b.lambda, 1.0 / 20.0, 1.0, "lambda");
  if (!b.l1.open) throw std::invalid_argument("l1 is sampled on an open interval");
  return b;
}

DesignPoint grid_point(const DesignBounds& b, std::size_t index) {
  const auto l1_i = static_cast<int>(index % b.l1.samples);
  index /= b.l1.samples;
  const auto h2_i = static_cast<int>(index % b.h2.samples);
  index /= b.h2.samples;
  const auto h1_i = static_cast<int>(index % b.h1.samples);
  index /= b.h1.samples;
  const auto lambda_i = static_cast<int>(index);
  return {b.h1.at(h1_i), b.h2.at(h2_i), b.l1.at(l1_i), b.lambda.at(lambda_i)};
}

std::vector<DesignPoint> enumerate_grid(const DesignBounds& b) {
  validate_bounds(b);
  std::vector<DesignPoint> points;
  points.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) points.push_back(grid_point(b, i));
  return points;
}

std::optional<double> capped_alpha_sing(const DesignPoint& x) {
  const SegmentGeometry g = x.geometry();
  try {
    validate_geometry(g);
  } catch (const InvalidGeometry&) {
    return std::nullopt;
  }
  const SingularitySet set = singular_angles(g);
  return std::min(set.alpha_sing.value_or(kAlphaSingCap), kAlphaSingCap);
}

DesignRecord evaluate_design(const DesignPoint& x, const SpringParams& springs) {
  DesignRecord record;
  record.x = x;
  const std::optional<double> reach = capped_alpha_sing(x);
  if (!reach) return record;

  const SegmentGeometry g = x.geometry();
  record.feasible = true;
  record.alpha_sing = *reach;
  record.stability = classify_home_stability(g, springs);
  record.total_energy = total_energy(g, springs, -*reach, *reach);
  record.energy_at_zero = energy(g, springs, 0.0);
  record.energy_at_sing = energy(g, springs, *reach);
  return record;
}

OptimizationReport optimize(const DesignBounds& bounds, const SpringParams& springs,
                            const OptimizeOptions& options) {
  validate_bounds(bounds);
  validate_springs(springs);
  const int workers = resolve_workers(options.workers);
  const std::size_t total = bounds.size();

  constexpr double kInfeasible = -1.0;
  std::vector<double> reach(total);
  parallel_for(total, workers, [&](std::size_t i) {
    reach[i] = capped_alpha_sing(grid_point(bounds, i)).value_or(kInfeasible);
  });

  OptimizationReport report;
  report.evaluated = total;
  report.infeasible = static_cast<std::size_t>(std::count(reach.begin(), reach.end(), kInfeasible));
  if (report.infeasible == total) throw EmptyGrid();

  // Designs tying for the best travel within each lambda block.
  const std::size_t block = total / bounds.lambda.samples;
  std::vector<std::size_t> candidates;
  std::vector<std::size_t> block_begin;
  for (int li = 0; li < bounds.lambda.samples; ++li) {
    const auto first = reach.begin() + static_cast<std::ptrdiff_t>(li * block);
    const double best = *std::max_element(first, first + static_cast<std::ptrdiff_t>(block));
    block_begin.push_back(candidates.size());
    if (best == kInfeasible) continue;
    for (std::size_t i = li * block; i < (li + 1) * block; ++i) {
      if (reach[i] != kInfeasible && reach[i] >= best - kTieTolerance) candidates.push_back(i);
    }
  }
  block_begin.push_back(candidates.size());

  std::vector<DesignRecord> records(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t k) {
    records[k] = evaluate_design(grid_point(bounds, candidates[k]), springs);
  });

  for (int li = 0; li < bounds.lambda.samples; ++li) {
    const auto first = records.begin() + static_cast<std::ptrdiff_t>(block_begin[li]);
    const auto last = records.begin() + static_cast<std::ptrdiff_t>(block_begin[li + 1]);
    if (first == last) continue;
    const DesignRecord& best = *std::min_element(
        first, last,
        [&](const DesignRecord& a, const DesignRecord& b) { return better(a, b, options.tie_break); });
    report.best.push_back(best);
    report.lambda_curve.push_back({best.x.lambda, best.x.l1, best.x.l2()});
    report.energy_curve.push_back({best.x.lambda, best.total_energy});
    report.max_alpha_sing = std::max(report.max_alpha_sing, best.alpha_sing);
  }
  return report;
}

}  // namespace tensegrity
