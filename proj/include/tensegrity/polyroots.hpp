#pragma once

#include <span>
#include <vector>

#include "tensegrity/mechanism.hpp"

namespace tensegrity {

// Real polynomial with ascending coefficients. Leading coefficients below
// kTrimTolerance * max|c| are dropped on construction, so degree() is the
// numerical degree.
class Polynomial {
 public:
  static constexpr double kTrimTolerance = 1e-12;

  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  std::span<const double> coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double max_abs_coeff() const;

  double operator()(double x) const;
  // sum_k |c_k| |x|^k, the magnitude against which residuals are judged.
  double magnitude(double x) const;

  Polynomial derivative() const;
  // x^deg p(1/x).
  Polynomial reversed() const;

 private:
  std::vector<double> coeffs_;
};

// Sign-variation counter built from the negated-remainder chain of p and p'.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int sign_changes(double x) const;
  // Distinct real roots in (a, b].
  int count_roots(double a, double b) const { return sign_changes(a) - sign_changes(b); }
  std::size_t size() const { return chain_.size(); }

 private:
  std::vector<Polynomial> chain_;
};

struct Root {
  double value = 0.0;
  double residual = 0.0;
  // Even multiplicity: p touches zero without changing sign.
  bool tangential = false;
};

struct RootSet {
  std::vector<Root> roots;  // strictly increasing
  // Distinct roots reported by the Sturm count over the search interval.
  int bracket_count = 0;

  std::vector<double> values() const;
};

inline constexpr double kRootDedupTolerance = 1e-8;

// All distinct real roots of p in [lo, hi]. Throws DegenerateInput for a zero
// polynomial and std::invalid_argument when lo >= hi.
RootSet real_roots(const Polynomial& p, double lo, double hi);

// p(t) with p(tan(a/2)) = (1 + t^2)^4 * singularity_condition(g, a), a != pi.
Polynomial half_angle_polynomial(const SegmentGeometry& g);

}  // namespace tensegrity
