#pragma once
// Test-only reference computations. Nothing here calls into the code paths it
// is used to check.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "tensegrity/mechanism.hpp"

namespace oracle {

using tensegrity::SegmentGeometry;

// Closed-loop equations written out term by term.
inline double rho1_squared(const SegmentGeometry& g, double a) {
  const double s = std::sin(a), c = std::cos(a);
  const double x = (-2 * g.h3 * c - g.h2) * s - 2 * g.l2 * c * c + g.l2 + g.l1;
  const double y = 2 * g.h3 * c * c + (-2 * g.l2 * s + g.h2) * c + g.h1 - g.h3;
  return x * x + y * y;
}

inline double rho2_squared(const SegmentGeometry& g, double a) {
  const double s = std::sin(a), c = std::cos(a);
  const double x = (-2 * g.h3 * c - g.h2) * s + 2 * g.l2 * c * c - g.l2 - g.l1;
  const double y = 2 * g.h3 * c * c + (2 * g.l2 * s + g.h2) * c + g.h1 - g.h3;
  return x * x + y * y;
}

inline double central_difference(const std::function<double(double)>& f, double x,
                                  double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

inline double trapezoid(const std::function<double(double)>& f, double lo, double hi, long n) {
  const double h = (hi - lo) / n;
  double sum = 0.5 * (f(lo) + f(hi));
  for (long i = 1; i < n; ++i) sum += f(lo + h * i);
  return sum * h;
}

// Solves V c = y for the monomial coefficients through the given nodes.
inline std::vector<double> interpolate(const std::vector<double>& nodes,
                                       const std::vector<double>& values) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < n; ++j, p *= nodes[i]) m[i][j] = p;
    m[i][n] = values[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    std::swap(m[col], m[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = m[i][n] / m[i][i];
  return c;
}

inline std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> nodes(n);
  for (int k = 0; k < n; ++k) nodes[k] = std::cos(std::numbers::pi * (2.0 * k + 1) / (2.0 * n));
  return nodes;
}

// Ascending coefficients of lead * prod (t - r).
inline std::vector<double> from_roots(const std::vector<double>& roots, double lead = 1.0) {
  std::vector<double> c = {lead};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

inline std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline SegmentGeometry random_geometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> h(0.0, 2.0), spine(0.1, 2.0), width(0.1, 3.0);
  return {h(rng), spine(rng), h(rng), width(rng), width(rng)};
}

}  // namespace oracle
