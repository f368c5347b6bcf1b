#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tensegrity/errors.hpp"
#include "tensegrity/optimizer.hpp"

using namespace tensegrity;
using doctest::Approx;
using std::numbers::pi;

namespace {

DesignBounds small_bounds() {
  DesignBounds b;
  b.l1.samples = 6;
  b.h1.samples = 3;
  b.h2.samples = 5;
  b.lambda.samples = 3;
  return b;
}

}  // namespace

TEST_CASE("grid enumeration") {
  DesignBounds b;
  b.l1.samples = 2;
  b.h1.samples = 2;
  b.h2.samples = 2;
  b.lambda.samples = 2;
  const auto points = enumerate_grid(b);
  CHECK(points.size() == 16);
  CHECK(points[0] == DesignPoint{0.0, 0.0, 1.125, 0.05});
  CHECK(points[1] == DesignPoint{0.0, 0.0, 3.375, 0.05});
  CHECK(points[2] == DesignPoint{0.0, 2.0, 1.125, 0.05});
  CHECK(points[15] == DesignPoint{1.0, 2.0, 3.375, 1.0});

  const auto full = enumerate_grid(DesignBounds{});
  CHECK(full.size() == 45u * 11 * 21 * 20);
  for (const DesignPoint& x : full) {
    CHECK_FALSE(x.l1 == 0.0);
    CHECK_FALSE(x.l1 == 4.5);
  }
  CHECK(full.front().lambda == 0.05);
  CHECK(full.back().lambda == 1.0);
  CHECK(full.back().h2 == 2.0);
  CHECK(full.back().l1 == Approx(4.45));
}

TEST_CASE("bounds validation") {
  DesignBounds b;
  b.h2.samples = 1;
  CHECK_THROWS_AS(validate_bounds(b), std::invalid_argument);
  b = DesignBounds{};
  b.l1.hi = 5.0;
  CHECK_THROWS_AS(validate_bounds(b), std::invalid_argument);
  b = DesignBounds{};
  b.lambda.lo = 0.0;
  CHECK_THROWS_AS(validate_bounds(b), std::invalid_argument);
  b = DesignBounds{};
  b.l1.open = false;
  CHECK_THROWS_AS(validate_bounds(b), std::invalid_argument);
  b = DesignBounds{};
  b.h1 = {0.25, 0.75, 3, false};
  CHECK_NOTHROW(validate_bounds(b));
}

TEST_CASE("capped_alpha_sing") {
  CHECK(capped_alpha_sing({1.0, 1.0, 1.0, 1.0}).value() == Approx(pi / 4).epsilon(1e-12));
  // h1 = 0 with a tall enough spine keeps the loop-1 root beyond a quarter turn.
  CHECK(capped_alpha_sing({0.0, 2.0, 1.0, 1.0}).value() == kAlphaSingCap);
  CHECK_FALSE(capped_alpha_sing({0.0, 0.0, 1.0, 1.0}).has_value());
}

TEST_CASE("evaluate_design") {
  const SpringParams springs;
  const DesignRecord unit = evaluate_design({1.0, 1.0, 1.0, 1.0}, springs);
  CHECK(unit.feasible);
  CHECK(unit.energy_at_zero == Approx(3.24));
  CHECK(unit.energy_at_sing == Approx(energy({1, 1, 1, 1, 1}, springs, pi / 4)).epsilon(1e-12));
  CHECK(unit.total_energy == Approx(total_energy({1, 1, 1, 1, 1}, springs)).epsilon(1e-12));

  const DesignRecord flat = evaluate_design({0.5, 0.0, 2.0, 0.5}, springs);
  CHECK_FALSE(flat.feasible);
}

TEST_CASE("optimize matches exhaustive evaluation") {
  const DesignBounds b = small_bounds();
  const SpringParams springs;
  const auto points = enumerate_grid(b);
  const std::size_t block = points.size() / b.lambda.samples;

  const OptimizationReport report = optimize(b, springs, {1, TieBreak::kLowestEnergy});
  REQUIRE(report.best.size() == 3);
  CHECK(report.evaluated == points.size());

  std::size_t infeasible = 0;
  for (int li = 0; li < b.lambda.samples; ++li) {
    double best_reach = -1.0;
    double best_energy = 0.0;
    for (std::size_t i = li * block; i < (li + 1) * block; ++i) {
      const DesignRecord r = evaluate_design(points[i], springs);
      if (!r.feasible) {
        ++infeasible;
        continue;
      }
      if (r.alpha_sing > best_reach + 1e-9 ||
          (std::abs(r.alpha_sing - best_reach) <= 1e-9 && r.total_energy < best_energy)) {
        best_reach = std::max(best_reach, r.alpha_sing);
        best_energy = r.total_energy;
      }
    }
    CHECK(report.best[li].alpha_sing == Approx(best_reach).epsilon(1e-12));
    CHECK(report.best[li].total_energy == Approx(best_energy).epsilon(1e-12));
    CHECK(report.best[li].x.lambda == b.lambda.at(li));
  }
  CHECK(report.infeasible == infeasible);
}

TEST_CASE("tie-break rules") {
  const DesignBounds b = small_bounds();
  const OptimizationReport wide = optimize(b, SpringParams{}, {1, TieBreak::kLargestBase});
  const OptimizationReport cheap = optimize(b, SpringParams{}, {1, TieBreak::kLowestEnergy});
  for (std::size_t i = 0; i < wide.best.size(); ++i) {
    CHECK(wide.best[i].alpha_sing == Approx(cheap.best[i].alpha_sing).epsilon(1e-9));
    CHECK(wide.best[i].x.l1 >= cheap.best[i].x.l1);
    CHECK(cheap.best[i].total_energy <= wide.best[i].total_energy);
    CHECK(wide.best[i].x.h1 == 0.0);
  }
}

TEST_CASE("worker count does not change the result") {
  const DesignBounds b = small_bounds();
  const OptimizationReport one = optimize(b, SpringParams{}, {1});
  const OptimizationReport many = optimize(b, SpringParams{}, {8});
  REQUIRE(one.best.size() == many.best.size());
  for (std::size_t i = 0; i < one.best.size(); ++i) {
    CHECK(one.best[i].x == many.best[i].x);
    CHECK(one.best[i].total_energy == many.best[i].total_energy);
  }
  CHECK(one.max_alpha_sing == many.max_alpha_sing);
}

TEST_CASE("refining the grid never lowers the best travel") {
  DesignBounds coarse = small_bounds();
  coarse.lambda.samples = 2;
  DesignBounds fine = coarse;
  fine.h1.samples = 5;  // contains every coarse h1 sample
  fine.h2.samples = 9;
  const OptimizationReport a = optimize(coarse, SpringParams{}, {});
  const OptimizationReport b = optimize(fine, SpringParams{}, {});
  for (std::size_t i = 0; i < a.best.size(); ++i) {
    CHECK(b.best[i].alpha_sing >= a.best[i].alpha_sing - 1e-12);
  }
}

TEST_CASE("zero-height spines are counted as infeasible") {
  DesignBounds b = small_bounds();
  const OptimizationReport report = optimize(b, SpringParams{}, {});
  // One of the five h2 samples is zero.
  CHECK(report.infeasible == b.size() / 5);
  b.h2.lo = 0.5;
  CHECK(optimize(b, SpringParams{}, {}).infeasible == 0);
}
