#include "specfun/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specfun {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::range: return "range";
    case ErrorKind::bracket: return "bracket";
    case ErrorKind::iteration_cap: return "iteration-cap";
    case ErrorKind::constraint: return "constraint";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::unknown_id: return "unknown-id";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// PairValue
// ---------------------------------------------------------------------------

PairValue operator+(const PairValue& a, const PairValue& b) {
  PairValue s = eft::two_sum(a.hi, b.hi);
  const PairValue t = eft::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = eft::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return eft::quick_two_sum(s.hi, s.lo);
}

PairValue operator-(const PairValue& a) { return {-a.hi, -a.lo}; }

PairValue operator-(const PairValue& a, const PairValue& b) { return a + (-b); }

PairValue operator*(const PairValue& a, const PairValue& b) {
  PairValue p = eft::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return eft::quick_two_sum(p.hi, p.lo);
}

PairValue operator*(const PairValue& a, double b) {
  PairValue p = eft::two_prod(a.hi, b);
  p.lo += a.lo * b;
  return eft::quick_two_sum(p.hi, p.lo);
}

PairValue operator/(const PairValue& a, const PairValue& b) {
  const double q1 = a.hi / b.hi;
  PairValue r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  return eft::quick_two_sum(q1, q2) + PairValue(q3);
}

PairValue operator/(const PairValue& a, double b) { return a / PairValue(b); }

PairValue exp(const PairValue& x) {
  if (x.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
  if (x.hi < -745.0) return {0.0, 0.0};
  constexpr int kSquarings = 10;
  const double k = std::nearbyint(x.hi / dd_constants::ln2.hi);
  PairValue r = x - dd_constants::ln2 * k;
  r = {std::ldexp(r.hi, -kSquarings), std::ldexp(r.lo, -kSquarings)};

  // expm1(r) by Taylor series; |r| < 3.4e-4 so 10 terms reach 1e-33.
  PairValue term = r;
  PairValue sum = r;
  for (int n = 2; n <= 11; ++n) {
    term = term * r / static_cast<double>(n);
    sum += term;
  }
  // (1 + s)^2 - 1 = s (2 + s)
  for (int i = 0; i < kSquarings; ++i) sum = sum * (PairValue(2.0) + sum);
  PairValue result = sum + PairValue(1.0);
  const int ik = static_cast<int>(k);
  return {std::ldexp(result.hi, ik), std::ldexp(result.lo, ik)};
}

PairValue log(const PairValue& x) {
  if (!(x.hi > 0.0)) {
    throw Error(ErrorKind::domain, "log of a nonpositive double-double");
  }
  // One Newton step on exp(y) = x doubles the 53-bit seed.
  const PairValue y(std::log(x.hi));
  return y + x * exp(-y) - PairValue(1.0);
}

// ---------------------------------------------------------------------------
// Summation
// ---------------------------------------------------------------------------

void CompensatedSum::add(double x) {
  naive_ += x;
  if (!std::isfinite(x)) {
    special_ += x;
    has_special_ = true;
    return;
  }
  if (overflowed_) return;
  std::size_t i = 0;
  for (double y : partials_) {
    if (std::abs(x) < std::abs(y)) std::swap(x, y);
    const double hi = x + y;
    if (!std::isfinite(hi)) {
      overflowed_ = true;
      return;
    }
    const double lo = y - (hi - x);
    if (lo != 0.0) partials_[i++] = lo;
    x = hi;
  }
  partials_.resize(i);
  partials_.push_back(x);
}

double CompensatedSum::value() const {
  if (has_special_) return special_;
  if (overflowed_) return naive_;
  std::size_t n = partials_.size();
  if (n == 0) return 0.0;
  double hi = partials_[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials_[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  // Round-half-even correction when the remaining partials push the exact
  // sum past the halfway point.
  if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) ||
                (lo > 0.0 && partials_[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    const double yr = x - hi;
    if (y == yr) hi = x;
  }
  return hi;
}

double compensated_sum(std::span<const double> terms) {
  CompensatedSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

double default_derivative_step(int order, double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(1.0, std::abs(x));
  switch (order) {
    case 1: return std::cbrt(eps) * scale;
    case 2: return std::pow(eps, 0.25) * scale;
    case 3: return 1e-2 * scale;
    default: throw Error(ErrorKind::domain, "derivative order must be 1, 2 or 3");
  }
}

namespace detail {

Stencil stencil_for(int order, StencilAccuracy accuracy) {
  const bool fourth = accuracy == StencilAccuracy::fourth;
  switch (order) {
    case 1:
      if (fourth) return {2, {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12}, 1.0};
      return {1, {-0.5, 0.0, 0.5}, 1.0};
    case 2:
      if (fourth) {
        return {2, {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12}, 2.0};
      }
      return {1, {1.0, -2.0, 1.0}, 2.0};
    case 3:
      if (fourth) {
        return {3, {0.125, -1.0, 1.625, 0.0, -1.625, 1.0, -0.125}, 3.0};
      }
      return {2, {-0.5, 1.0, 0.0, -1.0, 0.5}, 3.0};
    default:
      throw Error(ErrorKind::domain, "derivative order must be 1, 2 or 3");
  }
}

bool same_sign(double a, double b) { return (a < 0.0) == (b < 0.0); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

std::string to_string(Spacing s) {
  switch (s) {
    case Spacing::linear: return "linear";
    case Spacing::logarithmic: return "logarithmic";
    case Spacing::atanh_stretched: return "atanh-stretched";
  }
  return "unknown";
}

Grid::Grid(double lo, double hi, int n, Spacing spacing)
    : lo_(lo), hi_(hi), n_(n), spacing_(spacing) {
  if (!(lo < hi)) throw Error(ErrorKind::domain, "grid requires lo < hi");
  if (n < 2) throw Error(ErrorKind::domain, "grid requires at least two points");
  if (spacing == Spacing::logarithmic && !(lo > 0.0)) {
    throw Error(ErrorKind::domain, "logarithmic grid requires lo > 0");
  }
}

std::vector<double> Grid::points() const {
  std::vector<double> pts(static_cast<std::size_t>(n_));
  const double last = n_ - 1;
  switch (spacing_) {
    case Spacing::linear:
      for (int i = 0; i < n_; ++i) pts[i] = lo_ + (hi_ - lo_) * (i / last);
      pts.back() = hi_;
      break;
    case Spacing::logarithmic: {
      const double llo = std::log(lo_);
      const double lhi = std::log(hi_);
      for (int i = 0; i < n_; ++i) pts[i] = std::exp(llo + (lhi - llo) * (i / last));
      pts.front() = lo_;
      pts.back() = hi_;
      break;
    }
    case Spacing::atanh_stretched: {
      // Uniform in s = atanh(2u - 1) on cell midpoints, |s| <= 9, so the
      // outermost points sit about 1.5e-8 (relative) inside the ends.
      constexpr double kStretch = 9.0;
      for (int i = 0; i < n_; ++i) {
        const double s = kStretch * (2.0 * (i + 0.5) / n_ - 1.0);
        // (1 + tanh s)/2 and (1 - tanh s)/2 computed without cancellation.
        const double e = std::exp(-2.0 * std::abs(s));
        const double small = e / (1.0 + e);
        const double u = s < 0 ? small : 1.0 - small;
        pts[i] = s < 0 ? lo_ + (hi_ - lo_) * u : hi_ - (hi_ - lo_) * small;
      }
      break;
    }
  }
  // Rounding can only ever produce ties at the extreme ends of very dense grids.
  for (int i = 1; i < n_; ++i) {
    if (!(pts[i] > pts[i - 1])) pts[i] = std::nextafter(pts[i - 1], hi_);
  }
  return pts;
}

}  // namespace specfun
