#include "specfun/balls.hpp"

#include "specfun/error.hpp"
#include "specfun/gamma.hpp"

namespace specfun {

namespace {

// Below this dimension π^{n/2} and Γ(n/2+1) are both representable, so
// the quotient is accurate to a few ulps.
constexpr int kDirectLimit = 340;

void check_dimension(int n, int lo) {
  if (n < lo || n > kMaxBallDimension) {
    throw Error(ErrorKind::range, "ball dimension outside the supported range");
  }
}

}  // namespace

double log_ball_volume(int n) {
  check_dimension(n, 0);
  const double h = 0.5 * n;
  return h * std::log(constants::pi) - log_gamma(h + 1.0);
}

double ball_volume(int n) {
  check_dimension(n, 0);
  if (n <= kDirectLimit) {
    const double h = 0.5 * n;
    return std::pow(constants::pi, h) / gamma(h + 1.0);
  }
  return std::exp(log_ball_volume(n));
}

double sphere_area(int n_minus_1) {
  check_dimension(n_minus_1 + 1, 1);
  const int n = n_minus_1 + 1;
  return n * ball_volume(n);
}

BallGeometry ball_geometry(int n) {
  check_dimension(n, 1);
  const double v = ball_volume(n);
  return {n, v, n * v};
}

namespace {

double ratio(int num, int den) {
  if (num <= kDirectLimit && den <= kDirectLimit) return ball_volume(num) / ball_volume(den);
  return std::exp(log_ball_volume(num) - log_ball_volume(den));
}

}  // namespace

double power_mean_ratio(int n) {
  check_dimension(n + 1, 2);
  const double e = static_cast<double>(n) / (n + 1);
  if (n + 1 <= kDirectLimit) return ball_volume(n) / std::pow(ball_volume(n + 1), e);
  return std::exp(log_ball_volume(n) - e * log_ball_volume(n + 1));
}

double adjacent_ratio(int n) {
  check_dimension(n, 1);
  return ratio(n - 1, n);
}

double log_convexity_ratio(int n) {
  check_dimension(n + 1, 2);
  return ratio(n, n - 1) * ratio(n, n + 1);
}

double difference_quantity(int n) {
  check_dimension(n + 1, 2);
  return (n + 1) * ratio(n + 1, n) - n * ratio(n, n - 1);
}

double volume_root(int n) {
  check_dimension(n, 2);
  return std::exp(log_ball_volume(n) / (n * std::log(static_cast<double>(n))));
}

}  // namespace specfun
