#include "tensegrity/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tensegrity/errors.hpp"

namespace tensegrity {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Remainders smaller than this, relative to the division's operand scale,
// are treated as exact zeros when building the Sturm chain.
constexpr double kRemainderTolerance = 1e-11;
// Accepted residual relative to Polynomial::magnitude at the root.
constexpr double kResidualTolerance = 1e-10;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

Polynomial normalized(const Polynomial& p) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  const double m = p.max_abs_coeff();
  for (double& v : c) v /= m;
  return Polynomial(std::move(c));
}

// Negated remainder of a / b, or the zero polynomial when the remainder is
// numerically zero.
Polynomial negated_remainder(const Polynomial& a, const Polynomial& b) {
  std::vector<double> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const int n = b.degree();
  const double lead = bc[n];
  double max_quotient = 0.0;
  for (int k = a.degree() - n; k >= 0; --k) {
    const double q = r[n + k] / lead;
    max_quotient = std::max(max_quotient, std::abs(q));
    for (int j = 0; j <= n; ++j) r[j + k] -= q * bc[j];
    r[n + k] = 0.0;
  }
  r.resize(n);

  const double scale = a.max_abs_coeff() + max_quotient * b.max_abs_coeff();
  const double floor = kRemainderTolerance * scale;
  while (!r.empty() && std::abs(r.back()) <= floor) r.pop_back();
  for (double& v : r) v = -v;
  return Polynomial(std::move(r));
}

struct Interval {
  double lo;
  double hi;
};

void isolate(const SturmSequence& sturm, double a, double b, int va, int vb,
             std::vector<Interval>& out, int depth) {
  const int count = va - vb;
  if (count <= 0) return;
  const double min_width = 4.0 * kEps * std::max({1.0, std::abs(a), std::abs(b)});
  if (count == 1 || b - a <= min_width || depth > 200) {
    out.push_back({a, b});
    return;
  }
  const double mid = 0.5 * (a + b);
  const int vm = sturm.sign_changes(mid);
  isolate(sturm, a, mid, va, vm, out, depth + 1);
  isolate(sturm, mid, b, vm, vb, out, depth + 1);
}

// Bracketed safeguarded Newton on a sign-changing interval.
double polish_bracketed(const Polynomial& p, const Polynomial& dp, double lo, double hi,
                        double flo) {
  double x = 0.5 * (lo + hi);
  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 300; ++iter) {
    const double fx = p(x);
    if (fx == 0.0) return x;
    if (sign_of(fx) == sign_of(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = dp(x);
    double next = d != 0.0 ? x - fx / d : lo;
    if (!(next > lo && next < hi) || std::abs(fx) > 0.5 * previous) next = 0.5 * (lo + hi);
    previous = std::abs(fx);
    if (std::abs(next - x) <= 2.0 * kEps * std::max(1.0, std::abs(x)) ||
        hi - lo <= 2.0 * kEps * std::max(1.0, std::abs(x))) {
      return std::abs(p(next)) < std::abs(fx) ? next : x;
    }
    x = next;
  }
  return x;
}

std::optional<Root> polish(const Polynomial& p, const Polynomial& dp, Interval iv) {
  const double fa = p(iv.lo);
  const double fb = p(iv.hi);
  Root root;
  if (fb == 0.0) {
    root.value = iv.hi;
  } else if (sign_of(fa) != sign_of(fb)) {
    root.value = fa == 0.0 ? iv.lo : polish_bracketed(p, dp, iv.lo, iv.hi, fa);
  } else {
    // Even multiplicity: the root is a sign-changing root of p'.
    root.tangential = true;
    if (dp.degree() < 1) return std::nullopt;
    const RootSet critical = real_roots(dp, iv.lo, iv.hi);
    if (critical.roots.empty()) return std::nullopt;
    const auto best = std::min_element(
        critical.roots.begin(), critical.roots.end(),
        [&](const Root& l, const Root& r) { return std::abs(p(l.value)) < std::abs(p(r.value)); });
    root.value = best->value;
  }
  root.residual = std::abs(p(root.value));
  if (root.residual > kResidualTolerance * p.magnitude(root.value)) return std::nullopt;
  return root;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  const double m = max_abs_coeff();
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimTolerance * m) coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::magnitude(double x) const {
  const double ax = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reversed() const {
  return Polynomial(std::vector<double>(coeffs_.rbegin(), coeffs_.rend()));
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("Sturm sequence of the zero polynomial");
  chain_.push_back(normalized(p));
  if (p.degree() == 0) return;
  chain_.push_back(normalized(p.derivative()));
  while (chain_.back().degree() > 0) {
    Polynomial next = negated_remainder(chain_[chain_.size() - 2], chain_.back());
    if (next.is_zero()) break;
    chain_.push_back(normalized(next));
  }
}

int SturmSequence::sign_changes(double x) const {
  int changes = 0;
  int last = 0;
  for (const Polynomial& q : chain_) {
    const int s = sign_of(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<double> RootSet::values() const {
  std::vector<double> v;
  v.reserve(roots.size());
  for (const Root& r : roots) v.push_back(r.value);
  return v;
}

RootSet real_roots(const Polynomial& p, double lo, double hi) {
  if (p.is_zero()) throw DegenerateInput("polynomial is identically zero");
  if (!(lo < hi)) throw std::invalid_argument("real_roots requires lo < hi");

  RootSet result;
  if (p.degree() == 0) return result;

  // Widen slightly so roots sitting exactly on an endpoint are counted.
  const double widen = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  const double a = lo - widen;
  const double b = hi + widen;

  const SturmSequence sturm(p);
  const int va = sturm.sign_changes(a);
  const int vb = sturm.sign_changes(b);
  result.bracket_count = std::max(0, va - vb);

  std::vector<Interval> intervals;
  isolate(sturm, a, b, va, vb, intervals, 0);

  const Polynomial dp = p.derivative();
  for (const Interval& iv : intervals) {
    std::optional<Root> root = polish(p, dp, iv);
    if (!root) continue;
    root->value = std::clamp(root->value, lo, hi);
    root->residual = std::abs(p(root->value));
    if (!result.roots.empty() &&
        root->value - result.roots.back().value <= kRootDedupTolerance) {
      Root& prev = result.roots.back();
      prev.tangential = prev.tangential || root->tangential;
      if (root->residual < prev.residual) {
        prev.value = root->value;
        prev.residual = root->residual;
      }
      continue;
    }
    result.roots.push_back(*root);
  }
  return result;
}

Polynomial half_angle_polynomial(const SegmentGeometry& g) {
  const auto [h1, h2, h3, l1, l2] = g;
  // Expansion of the trigonometric condition under sin a = 2t/(1+t^2),
  // cos a = (1-t^2)/(1+t^2), multiplied through by (1+t^2)^4.
  return Polynomial({
      -2.0 * (2.0 * h1 * l2 + h2 * l1 + h2 * l2 + 2.0 * h3 * l1),
      -4.0 * (h1 * h2 + 4.0 * h1 * h3 + h2 * h3 - 4.0 * l1 * l2),
      4.0 * (4.0 * h1 * l2 - h2 * l1 - h2 * l2 + 4.0 * h3 * l1),
      -4.0 * (3.0 * h1 * h2 + 4.0 * h1 * h3 + 3.0 * h2 * h3 - 4.0 * l1 * l2),
      40.0 * (h1 * l2 + h3 * l1),
      -4.0 * (3.0 * h1 * h2 - 4.0 * h1 * h3 + 3.0 * h2 * h3 + 4.0 * l1 * l2),
      4.0 * (4.0 * h1 * l2 + h2 * l1 + h2 * l2 + 4.0 * h3 * l1),
      -4.0 * (h1 * h2 - 4.0 * h1 * h3 + h2 * h3 + 4.0 * l1 * l2),
      -2.0 * (2.0 * h1 * l2 - h2 * l1 - h2 * l2 + 2.0 * h3 * l1),
  });
}

}  // namespace tensegrity
