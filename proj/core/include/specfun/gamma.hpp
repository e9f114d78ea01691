#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "specfun/kernel.hpp"

namespace specfun {

namespace constants {
// 0.57721566490153286060651209008240243...
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr PairValue euler_gamma_dd{0.5772156649015329, -4.942915152430645e-18};
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double log2 = 0.69314718055994530941723212145817657;
}  // namespace constants

struct GammaConstants {
  double euler_gamma;
  double pi;
  double log2;
};

inline constexpr GammaConstants gamma_constants{constants::euler_gamma, constants::pi,
                                                constants::log2};

enum class GammaMethod { detemple, karatsuba_series, direct_harmonic };

const char* to_string(GammaMethod m);

struct GammaEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  GammaMethod method = GammaMethod::direct_harmonic;
};

struct Rational {
  std::int64_t num;
  std::int64_t den;
  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Tail coefficients of the sixth-power gamma expansion, in order of
// decreasing power of x (the first multiplies x^0).
inline constexpr std::array<Rational, 7> karatsuba_expansion_coeffs{{
    {1, 30},
    {-11, 240},
    {79, 3360},
    {3539, 201600},
    {-9511, 403200},
    {-10051, 716800},
    {47474887, 1277337600},
}};

double gamma(double x);
double log_gamma(double x);
// log|Γ(x)| for any non-pole real x; `sign` receives the sign of Γ(x).
double log_abs_gamma(double x, int& sign);
double digamma(double x);
double trigamma(double x);
double beta(double a, double b);

// sin(πx) and cos(πx) with exact argument reduction.
double sinpi(double x);
double cospi(double x);

// Remainder S(x) = log Γ(x) - (x - 1/2) log x + x - log(2π)/2, x > 0.
double stirling_remainder(double x);

GammaEstimate ramanujan_gamma(double x, int terms);

// 30 (G(x)^6 - 8x^3 - 4x^2 - x) with G(x) = (e/x)^x Γ(1+x)/√π; θ(∞) = 1.
double theta(double x);

struct ThetaRecord {
  double x;
  double printed;  // four decimals as recorded by Ramanujan
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline constexpr std::array<ThetaRecord, 14> theta_record{{
    {0.0, 0.9675},
    {1.0 / 12, 0.8071},
    {2.0 / 12, 0.6160},
    {3.0 / 12, 0.4867},
    {4.0 / 12, 0.4029},
    {5.0 / 12, 0.3509},
    {6.0 / 12, 0.3207},
    {7.0 / 12, 0.3058},
    {8.0 / 12, 0.3014},
    {9.0 / 12, 0.3041},
    {10.0 / 12, 0.3118},
    {11.0 / 12, 0.3227},
    {1.0, 0.3359},
    {kInfinity, 1.0},
}};

struct DeTempleTerms {
  std::int64_t n = 0;
  double d_n = 0.0;            // H_n - log n
  double r_n = 0.0;            // H_n - log(n + 1/2)
  double r_minus_gamma = 0.0;  // R_n - γ without cancellation loss
  double big_h = 0.0;          // n^2 (R_n - γ)
};

DeTempleTerms detemple(std::int64_t n);
// Terms for n = 1..n_max with a single running harmonic sum.
std::vector<DeTempleTerms> detemple_range(std::int64_t n_max);

GammaEstimate detemple_euler_gamma(std::int64_t n);
GammaEstimate harmonic_euler_gamma(std::int64_t n);
GammaEstimate karatsuba_euler_gamma(int k);
// c_k = 2/(12k)! + 2k^2 e^{-k}
double karatsuba_bound(int k);

// log Γ(x+1) / (x log x), with the limit 1 - γ at x = 1.
double mono_f(double x);

// Σ_{n≥1} (n - x)/(n + x)^3
double lemma_g(double x);
// x^2 Ψ'(1+x) - x Ψ(1+x) + log Γ(1+x)
double lemma_h(double x);

}  // namespace specfun
