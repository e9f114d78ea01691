#pragma once

#include <cmath>

namespace specfun {

inline constexpr int kMaxBallDimension = 10000;

struct BallGeometry {
  int n = 0;
  double volume = 0.0;   // Ω_n
  double surface = 0.0;  // ω_{n-1} = n Ω_n
};

// log Ω_n = (n/2) log π - log Γ(n/2 + 1), 0 <= n <= 10^4 (Ω_0 = 1).
double log_ball_volume(int n);
// Ω_n; underflows to 0 for n beyond ~1600, where log_ball_volume stays exact.
double ball_volume(int n);
// ω_{m} = (m+1) Ω_{m+1}
double sphere_area(int n_minus_1);
BallGeometry ball_geometry(int n);

// Quantities bounded by the sharp-constant inequalities.
double power_mean_ratio(int n);      // Ω_n / Ω_{n+1}^{n/(n+1)}
double adjacent_ratio(int n);        // Ω_{n-1} / Ω_n
double log_convexity_ratio(int n);   // Ω_n^2 / (Ω_{n-1} Ω_{n+1})
double difference_quantity(int n);   // (n+1) Ω_{n+1}/Ω_n - n Ω_n/Ω_{n-1}
double volume_root(int n);           // Ω_n^{1/(n log n)}, n >= 2

namespace ball_constants {
inline const double power_lower = 2.0 / std::sqrt(3.14159265358979323846);  // a
inline const double power_upper = std::sqrt(2.71828182845904523536);        // b
inline constexpr double ratio_lower = 0.5;                                   // A
inline constexpr double ratio_upper = 3.14159265358979323846 / 2.0 - 1.0;    // B
inline const double log_convex_lower = 2.0 - std::log(3.14159265358979323846) / std::log(2.0);
inline constexpr double log_convex_upper = 0.5;
inline constexpr double difference_lower = (4.0 - 3.14159265358979323846) * 1.41421356237309504880;
inline const double difference_upper = 0.5 * std::sqrt(2.0 * 3.14159265358979323846);
}  // namespace ball_constants

}  // namespace specfun
