#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specfun/error.hpp"

namespace specfun {

// ---------------------------------------------------------------------------
// Double-double arithmetic.
//
// A PairValue represents hi + lo with |lo| <= ulp(hi)/2.  It is used only in
// the few places where binary64 cancellation would dominate: the Euler
// constant accelerations and a handful of near-singular series.
// ---------------------------------------------------------------------------

struct PairValue {
  double hi = 0.0;
  double lo = 0.0;

  constexpr PairValue() = default;
  constexpr PairValue(double h) : hi(h), lo(0.0) {}  // NOLINT: implicit by intent
  constexpr PairValue(double h, double l) : hi(h), lo(l) {}

  constexpr double value() const { return hi + lo; }
};

namespace eft {

// Error-free transformations.  s + e == a + b exactly.
inline PairValue two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

// Requires |a| >= |b| (or a == 0).
inline PairValue quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline PairValue two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace eft

PairValue operator+(const PairValue& a, const PairValue& b);
PairValue operator-(const PairValue& a, const PairValue& b);
PairValue operator-(const PairValue& a);
PairValue operator*(const PairValue& a, const PairValue& b);
PairValue operator*(const PairValue& a, double b);
PairValue operator/(const PairValue& a, const PairValue& b);
PairValue operator/(const PairValue& a, double b);

inline PairValue& operator+=(PairValue& a, const PairValue& b) { return a = a + b; }
inline PairValue& operator-=(PairValue& a, const PairValue& b) { return a = a - b; }
inline PairValue& operator*=(PairValue& a, const PairValue& b) { return a = a * b; }

PairValue exp(const PairValue& x);
// Natural log; x.hi must be positive.
PairValue log(const PairValue& x);

namespace dd_constants {
inline constexpr PairValue ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr PairValue pi{3.141592653589793, 1.2246467991473532e-16};
}  // namespace dd_constants

// ---------------------------------------------------------------------------
// Summation
// ---------------------------------------------------------------------------

/// Exact running sum of binary64 values (Shewchuk's non-overlapping partials).
/// value() returns the correctly rounded sum, so the result does not depend
/// on the order in which terms were added.
class CompensatedSum {
 public:
  void add(double x);
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const;

 private:
  std::vector<double> partials_;
  double special_ = 0.0;  // accumulates inf/nan terms
  bool has_special_ = false;
  bool overflowed_ = false;
  double naive_ = 0.0;
};

double compensated_sum(std::span<const double> terms);

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

enum class StencilAccuracy {
  second,  // 3-point (orders 1, 2) and 5-point (order 3) central stencils
  fourth,  // 5-point (orders 1, 2) and 7-point (order 3) central stencils
};

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Default step for a central difference of the given order at x.
double default_derivative_step(int order, double x);

namespace detail {
struct Stencil {
  int half_width;
  std::array<double, 7> weights;  // indexed from -half_width
  double denominator_power;       // divide by step^power
};
Stencil stencil_for(int order, StencilAccuracy accuracy);
}  // namespace detail

/// Central finite-difference estimate of f^(order)(x).  Throws a domain
/// error when a stencil node leaves `domain` (if supplied).
template <typename F>
  requires std::invocable<F&, double>
double derivative(F&& f, double x, int order, double step,
                  std::optional<Interval> domain = std::nullopt,
                  StencilAccuracy accuracy = StencilAccuracy::fourth) {
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "derivative step must be positive");
  const detail::Stencil s = detail::stencil_for(order, accuracy);
  if (domain) {
    const double reach = s.half_width * step;
    if (!domain->contains(x - reach) || !domain->contains(x + reach)) {
      throw Error(ErrorKind::domain, "derivative stencil leaves the declared domain");
    }
  }
  CompensatedSum acc;
  for (int k = -s.half_width; k <= s.half_width; ++k) {
    const double w = s.weights[static_cast<std::size_t>(k + s.half_width)];
    if (w != 0.0) acc.add(w * f(x + k * step));
  }
  return acc.value() / std::pow(step, s.denominator_power);
}

template <typename F>
  requires std::invocable<F&, double>
double derivative(F&& f, double x, int order) {
  return derivative(f, x, order, default_derivative_step(order, x));
}

// ---------------------------------------------------------------------------
// Monotone inversion
// ---------------------------------------------------------------------------

struct BracketRoot {
  double root = 0.0;
  double residual = 0.0;  // f(root) - target
  int iterations = 0;
  // True when the tolerance was not met because the bracket shrank to two
  // adjacent doubles; `root` is then the better endpoint.
  bool at_resolution = false;
};

inline constexpr double kDefaultRootTolerance = 1e-14;
inline constexpr int kRootIterationCap = 200;

namespace detail {
bool same_sign(double a, double b);
}

/// Solve f(x) = target for strictly monotone f on [lo, hi].  Illinois-style
/// false position; a bisection step is forced whenever the bracket fails to
/// halve over two consecutive iterations, so the iteration count is bounded
/// by roughly twice the bisection count.
template <typename F>
  requires std::invocable<F&, double>
BracketRoot invert_monotone(F&& f, double target, double lo, double hi,
                            double tol = kDefaultRootTolerance,
                            int max_iterations = kRootIterationCap) {
  if (!(lo < hi)) throw Error(ErrorKind::bracket, "empty bracket");
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw Error(ErrorKind::bracket, "function is not finite at the bracket ends");
  }
  if (flo == 0.0) return {lo, 0.0, 0, false};
  if (fhi == 0.0) return {hi, 0.0, 0, false};
  if (detail::same_sign(flo, fhi)) {
    throw Error(ErrorKind::bracket, "target is not enclosed by the bracket");
  }

  BracketRoot best{std::abs(flo) < std::abs(fhi) ? lo : hi,
                   std::abs(flo) < std::abs(fhi) ? flo : fhi, 0, false};
  int side = 0;  // which end was retained last (-1 lo, +1 hi)
  double width_prev = hi - lo;
  int slow_steps = 0;

  for (int it = 1; it <= max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      best.iterations = it - 1;
      best.at_resolution = std::abs(best.residual) > tol;
      return best;
    }
    double x = mid;
    if (slow_steps < 2 && std::isfinite(flo) && std::isfinite(fhi)) {
      const double secant = hi - fhi * (hi - lo) / (fhi - flo);
      if (secant > lo && secant < hi) x = secant;
    }
    const double fx = f(x) - target;
    if (std::isnan(fx)) throw Error(ErrorKind::domain, "function returned NaN inside bracket");
    if (std::abs(fx) < std::abs(best.residual)) best = {x, fx, it, false};
    if (std::abs(fx) <= tol) return {x, fx, it, false};

    if (detail::same_sign(fx, flo)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == +1) flo *= 0.5;
      side = +1;
    }
    const double width = hi - lo;
    slow_steps = (width > 0.5 * width_prev) ? slow_steps + 1 : 0;
    width_prev = width;
    best.iterations = it;
  }
  throw Error(ErrorKind::iteration_cap, "invert_monotone did not converge");
}

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

enum class Spacing { linear, logarithmic, atanh_stretched };

std::string to_string(Spacing s);

/// Sample points on [lo, hi].  Linear and logarithmic grids include both
/// endpoints; atanh-stretched grids cluster toward both ends but stay
/// strictly inside (lo, hi).
class Grid {
 public:
  Grid(double lo, double hi, int n, Spacing spacing = Spacing::linear);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int size() const { return n_; }
  Spacing spacing() const { return spacing_; }

  std::vector<double> points() const;
  Grid resized(int n) const { return Grid(lo_, hi_, n, spacing_); }

 private:
  double lo_;
  double hi_;
  int n_;
  Spacing spacing_;
};

}  // namespace specfun
