#include <cmath>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "specfun/balls.hpp"
#include "specfun/error.hpp"

using namespace specfun;
namespace bc = ball_constants;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Ω_n via Boost in log space
double oracle_log_volume(int n) { return 0.5 * n * std::log(kPi) - boost::math::lgamma(0.5 * n + 1.0); }

}  // namespace

TEST(BallVolume, Examples) {
  EXPECT_LE(rel(ball_volume(2), kPi), 1e-15);
  EXPECT_LE(rel(ball_volume(3), 4.1887902047863909846), 1e-15);
  // mpmath, 30 digits
  EXPECT_LE(rel(ball_volume(20), 0.025806891390014060013), 1e-13);
  EXPECT_LE(rel(ball_volume(100), 2.3682021018828339613e-40), 1e-12);
  EXPECT_EQ(ball_volume(0), 1.0);
}

TEST(BallVolume, AgreesWithBoostInLogSpace) {
  for (int n = 1; n <= 10000; n += (n < 100 ? 1 : 97)) {
    const double want = oracle_log_volume(n);
    EXPECT_NEAR(log_ball_volume(n), want, 1e-12 * std::max(1.0, std::abs(want))) << n;
  }
}

TEST(BallVolume, RangeErrors) {
  EXPECT_THROW(ball_volume(-1), Error);
  EXPECT_THROW(ball_volume(kMaxBallDimension + 1), Error);
  try {
    log_ball_volume(kMaxBallDimension + 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::range);
  }
}

TEST(SphereArea, Examples) {
  EXPECT_LE(rel(sphere_area(1), 2 * kPi), 1e-15);
  EXPECT_LE(rel(sphere_area(2), 4 * kPi), 1e-15);
  EXPECT_LE(rel(sphere_area(9), 10 * ball_volume(10)), 1e-15);
  for (int n = 1; n <= 50; ++n) {
    const auto g = ball_geometry(n);
    EXPECT_GT(g.volume, 0.0);
    EXPECT_LE(rel(g.surface, n * g.volume), 1e-15);
  }
}

TEST(BallMonotonicity, DecreasingFromSeven) {
  for (int n = 7; n < 200; ++n) {
    EXPECT_GT(ball_volume(n), ball_volume(n + 1)) << n;
    EXPECT_GT(sphere_area(n), sphere_area(n + 1)) << n;
  }
  // neither is monotone before that
  EXPECT_LT(ball_volume(4), ball_volume(5));
  EXPECT_LT(sphere_area(5), sphere_area(6));
}

TEST(BallMonotonicity, VolumeRootTendsToLimit) {
  const double limit = std::exp(-0.5);
  for (int n = 2; n < 200; ++n) {
    EXPECT_GT(volume_root(n), volume_root(n + 1)) << n;
    EXPECT_GT(volume_root(n), limit);
  }
  EXPECT_NEAR(volume_root(100), 0.82026492946682431494, 1e-14);
  // the approach is only logarithmic in n
  EXPECT_GT(volume_root(10000), limit);
  EXPECT_LT(volume_root(10000), volume_root(200));
}

// The printed constants are truncations.
TEST(BallInequalities, ConstantsToPrintedDigits) {
  auto truncated = [](double x, int digits) { return std::trunc(x * std::pow(10.0, digits)); };
  EXPECT_EQ(truncated(bc::power_lower, 5), 112837.0);
  EXPECT_EQ(truncated(bc::ratio_upper, 5), 57079.0);
  EXPECT_EQ(truncated(bc::log_convex_lower, 5), 34850.0);
  EXPECT_EQ(truncated(bc::difference_lower, 4), 12139.0);
  EXPECT_EQ(truncated(bc::difference_upper, 4), 12533.0);
}

// Non-strict bounds are attained at n = 1 or 2, so equality is allowed to
// within a relative rounding slack.
TEST(BallInequalities, AllFamiliesHold) {
  constexpr double slack = 1e-12;
  for (int n = 1; n <= 200; ++n) {
    const double pm = power_mean_ratio(n);
    EXPECT_GE(pm, bc::power_lower * (1 - slack)) << n;
    EXPECT_LE(pm, bc::power_upper * (1 + slack)) << n;
    const double ar = adjacent_ratio(n);
    EXPECT_GE(ar, std::sqrt((n + bc::ratio_lower) / (2 * kPi)) * (1 - slack)) << n;
    EXPECT_LE(ar, std::sqrt((n + bc::ratio_upper) / (2 * kPi)) * (1 + slack)) << n;
    const double lc = log_convexity_ratio(n);
    EXPECT_GE(lc, std::pow(1.0 + 1.0 / n, bc::log_convex_lower) * (1 - slack)) << n;
    EXPECT_LE(lc, std::pow(1.0 + 1.0 / n, bc::log_convex_upper) * (1 + slack)) << n;
    if (n >= 2) {
      const double d = difference_quantity(n);
      EXPECT_GE(d, bc::difference_lower / std::sqrt(n) * (1 - slack)) << n;
      EXPECT_LT(d, bc::difference_upper / std::sqrt(n)) << n;
    }
  }
}

TEST(BallInequalities, RatiosMatchDirectVolumes) {
  for (int n = 1; n <= 40; ++n) {
    const double v0 = ball_volume(n - 1), v1 = ball_volume(n), v2 = ball_volume(n + 1);
    EXPECT_LE(rel(adjacent_ratio(n), v0 / v1), 1e-13);
    EXPECT_LE(rel(log_convexity_ratio(n), v1 * v1 / (v0 * v2)), 1e-13);
    EXPECT_LE(rel(power_mean_ratio(n), v1 / std::pow(v2, n / (n + 1.0))), 1e-13);
    if (n >= 2) {
      const double want = (n + 1) * v2 / v1 - n * v1 / v0;
      EXPECT_NEAR(difference_quantity(n), want, 1e-12 * std::abs(want));
    }
  }
}

// Tightening each constant by 1e-3 shows a violation for a, B, α (n = 1)
// and the difference A (n = 2).  b, A and β are approached only as n → ∞
// and a 1e-3 perturbation is not visible by n = 200.
TEST(BallInequalities, SharpnessProbe) {
  constexpr double t = 1e-3;
  auto first_violation = [](auto holds) {
    for (int n = 1; n <= 200; ++n) {
      if (!holds(n)) return n;
    }
    return 0;
  };
  EXPECT_EQ(first_violation([&](int n) { return power_mean_ratio(n) >= bc::power_lower * (1 + t); }), 1);
  EXPECT_EQ(first_violation([&](int n) {
              return adjacent_ratio(n) <= std::sqrt((n + bc::ratio_upper * (1 - t)) / (2 * kPi));
            }),
            1);
  EXPECT_EQ(first_violation([&](int n) {
              return log_convexity_ratio(n) >= std::pow(1.0 + 1.0 / n, bc::log_convex_lower * (1 + t));
            }),
            1);
  EXPECT_EQ(first_violation([&](int n) {
              return n < 2 || difference_quantity(n) >= bc::difference_lower * (1 + t) / std::sqrt(n);
            }),
            2);
  EXPECT_EQ(first_violation([&](int n) { return power_mean_ratio(n) <= bc::power_upper * (1 - t); }), 0);
  EXPECT_EQ(first_violation([&](int n) {
              return adjacent_ratio(n) >= std::sqrt((n + bc::ratio_lower * (1 + t)) / (2 * kPi));
            }),
            0);
}
