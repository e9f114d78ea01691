#include "specfun/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specfun {

namespace {

constexpr double kPi = constants::pi;
constexpr double kEulerGamma = constants::euler_gamma;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;
constexpr double kMaxGammaArg = 171.6;
constexpr double kStirlingThreshold = 9.0;
constexpr double kPsiThreshold = 10.0;

// ζ(k) - 1 for k = 2..30.
constexpr std::array<double, 29> kZetaMinusOne{
    0.6449340668482264,     0.2020569031595943,     0.08232323371113819,
    0.03692775514336993,    0.01734306198444914,    0.008349277381922827,
    0.00407735619794434,    0.0020083928260822143,  0.0009945751278180853,
    0.0004941886041194645,  0.0002460865533080483,  0.00012271334757848915,
    6.124813505870483e-05,  3.058823630702049e-05,  1.528225940865187e-05,
    7.637197637899763e-06,  3.81729326499984e-06,   1.908212716553939e-06,
    9.539620338727962e-07,  4.769329867878064e-07,  2.38450502727733e-07,
    1.1921992596531106e-07, 5.960818905125948e-08,  2.980350351465228e-08,
    1.4901554828365043e-08, 7.45071178983543e-09,   3.725334024788457e-09,
    1.862659723513049e-09,  9.313274324196682e-10,
};

double zeta_minus_one(int k) {
  if (k >= 2 && k <= 30) return kZetaMinusOne[static_cast<std::size_t>(k - 2)];
  return std::ldexp(1.0, -k) + std::pow(3.0, -k) + std::ldexp(1.0, -2 * k);
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// log Γ(1+t), |t| <= 1/4
double lgamma1p_series(double t) {
  double sum = 0.0;
  double tk = t;
  for (int k = 2; k <= 30; ++k) {
    tk *= -t;  // (-1)^{k-1} t^k
    sum += (1.0 + zeta_minus_one(k)) * tk / k;
  }
  return -kEulerGamma * t - sum;
}

// log Γ(2+t), |t| <= 1/4
double lgamma2p_series(double t) {
  double sum = 0.0;
  double tk = t;
  for (int k = 2; k <= 30; ++k) {
    tk *= -t;
    sum += zeta_minus_one(k) * tk / k;
  }
  return (1.0 - kEulerGamma) * t - sum;
}

// (log Γ(2+t))/t, |t| <= 1/4, t != 0 allowed to be tiny
double lgamma2p_over_t(double t) {
  double sum = 0.0;
  double tk = 1.0;
  for (int k = 2; k <= 30; ++k) {
    tk *= -t;
    sum += zeta_minus_one(k) * tk / k;
  }
  return (1.0 - kEulerGamma) - sum;
}

double stirling_series(double x) {
  const double z = 1.0 / x;
  const double z2 = z * z;
  return z * (1.0 / 12 +
              z2 * (-1.0 / 360 +
                    z2 * (1.0 / 1260 +
                          z2 * (-1.0 / 1680 + z2 * (1.0 / 1188 + z2 * (-691.0 / 360360))))));
}

// (t + 1/2) log(1 + 1/t) - 1
double stirling_step(double t) {
  if (t >= 1.0) {
    const double u = 1.0 / (2.0 * t + 1.0);
    const double u2 = u * u;
    double term = u2;
    double sum = 0.0;
    for (int k = 1; k < 40; ++k) {
      const double add = term / (2 * k + 1);
      sum += add;
      if (add < 1e-18 * sum) break;
      term *= u2;
    }
    return sum;
  }
  return (t + 0.5) * std::log1p(1.0 / t) - 1.0;
}

double gamma_large(double x) {
  const double h = std::pow(x, 0.5 * (x - 0.5));
  return kSqrt2Pi * h * (h * std::exp(-x)) * std::exp(stirling_series(x));
}

constexpr PairValue kHalfLog2PiDD{0.9189385332046728, -3.8782941580672414e-17};
constexpr double kPairShift = 20.0;
constexpr double kPairLimit = 160.0;  // exp(PairValue) saturates just below log(DBL_MAX)

// Γ(x) on [0.5, kPairLimit] with the shift product, the Stirling logarithm
// and the exponential carried in double-double, so the result rounds once.
double gamma_pair(double x) {
  PairValue y(x);
  PairValue prod(1.0);
  while (y.hi < kPairShift) {
    prod *= y;
    y += PairValue(1.0);
  }
  const PairValue l = (y - PairValue(0.5)) * log(y) - y + kHalfLog2PiDD + PairValue(stirling_series(y.hi)) - log(prod);
  return exp(l).value();
}

double log_gamma_positive(double x) {
  if (std::abs(x - 1.0) <= 0.25) return lgamma1p_series(x - 1.0);
  if (std::abs(x - 2.0) <= 0.25) return lgamma2p_series(x - 2.0);
  if (x >= kStirlingThreshold) {
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_series(x);
  }
  double prod = 1.0;
  double y = x;
  while (y < kStirlingThreshold) {
    prod *= y;
    y += 1.0;
  }
  return log_gamma_positive(y) - std::log(prod);
}

}  // namespace

const char* to_string(GammaMethod m) {
  switch (m) {
    case GammaMethod::detemple: return "detemple";
    case GammaMethod::karatsuba_series: return "karatsuba_series";
    case GammaMethod::direct_harmonic: return "direct_harmonic";
  }
  return "unknown";
}

double sinpi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r < 0.25) return std::sin(kPi * r);
  if (r < 0.75) return std::cos(kPi * (r - 0.5));
  if (r < 1.25) return -std::sin(kPi * (r - 1.0));
  if (r < 1.75) return -std::cos(kPi * (r - 1.5));
  return std::sin(kPi * (r - 2.0));
}

double cospi(double x) { return sinpi(x + 0.5); }

double stirling_remainder(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "Stirling remainder needs x > 0");
  double acc = 0.0;
  while (x < kStirlingThreshold) {
    acc += stirling_step(x);
    x += 1.0;
  }
  return acc + stirling_series(x);
}

double gamma(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::domain, "gamma of NaN");
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::pole, "gamma has a pole at nonpositive integers");
  if (x > kMaxGammaArg) throw Error(ErrorKind::overflow, "gamma overflows binary64 for x > 171.6");
  if (x == std::floor(x)) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) {
    const double s = sinpi(x);
    const double mirror = 1.0 - x;
    if (mirror > kMaxGammaArg) {
      int sign = 1;
      const double l = log_abs_gamma(x, sign);
      return sign * std::exp(l);
    }
    const double g = kPi / (s * gamma(mirror));
    if (!std::isfinite(g)) throw Error(ErrorKind::overflow, "gamma overflows near a pole");
    return g;
  }
  if (x <= kPairLimit) return gamma_pair(x);
  return gamma_large(x);
}

double log_gamma(double x) {
  if (std::isnan(x) || !(x > 0.0)) throw Error(ErrorKind::domain, "log_gamma needs x > 0");
  if (std::isinf(x)) return x;
  return log_gamma_positive(x);
}

double log_abs_gamma(double x, int& sign) {
  if (std::isnan(x)) throw Error(ErrorKind::domain, "log_abs_gamma of NaN");
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::pole, "gamma has a pole at nonpositive integers");
  if (x > 0.0) {
    sign = 1;
    return log_gamma(x);
  }
  const double s = sinpi(x);
  sign = s < 0.0 ? -1 : 1;
  return std::log(kPi) - std::log(std::abs(s)) - log_gamma(1.0 - x);
}

double digamma(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::domain, "digamma of NaN");
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::pole, "digamma has a pole at nonpositive integers");
  if (x < 0.5) return digamma(1.0 - x) - kPi * cospi(x) / sinpi(x);
  double acc = 0.0;
  while (x < kPsiThreshold) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double z = 1.0 / x;
  const double z2 = z * z;
  const double tail =
      z2 * (1.0 / 12 +
            z2 * (-1.0 / 120 +
                  z2 * (1.0 / 252 +
                        z2 * (-1.0 / 240 +
                              z2 * (1.0 / 132 + z2 * (-691.0 / 32760 + z2 * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 * z - tail;
}

double trigamma(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::domain, "trigamma of NaN");
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::pole, "trigamma has a pole at nonpositive integers");
  if (x < 0.5) {
    const double s = sinpi(x);
    return kPi * kPi / (s * s) - trigamma(1.0 - x);
  }
  double acc = 0.0;
  while (x < kPsiThreshold) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double z = 1.0 / x;
  const double z2 = z * z;
  const double tail =
      z * z2 *
      (1.0 / 6 +
       z2 * (-1.0 / 30 +
             z2 * (1.0 / 42 + z2 * (-1.0 / 30 + z2 * (5.0 / 66 + z2 * (-691.0 / 2730 + z2 * (7.0 / 6)))))));
  return acc + z + 0.5 * z2 + tail;
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::domain, "beta needs a > 0 and b > 0");
  }
  const double s = a + b;
  if (s < 170.0 && std::min(a, b) >= 1e-290) {
    const double r = gamma(a) * (gamma(b) / gamma(s));
    if (std::isfinite(r) && r > 0.0) return r;
  }
  // Log space, arranged so that the large (x - 1/2) log x pieces cancel
  // analytically rather than numerically.
  const double lb = kHalfLog2Pi - 0.5 * std::log(s) + (a - 0.5) * std::log1p(-b / s) +
                    (b - 0.5) * std::log1p(-a / s) + stirling_remainder(a) +
                    stirling_remainder(b) - stirling_remainder(s);
  return std::exp(lb);
}

GammaEstimate ramanujan_gamma(double x, int terms) {
  if (!(x >= 1.0) || !std::isfinite(x)) throw Error(ErrorKind::domain, "ramanujan_gamma needs x >= 1");
  if (terms < 0 || terms > static_cast<int>(karatsuba_expansion_coeffs.size())) {
    throw Error(ErrorKind::range, "ramanujan_gamma uses between 0 and 7 tail terms");
  }
  const PairValue xd(x);
  PairValue poly = xd * (xd * (xd * 8.0 + PairValue(4.0)) + PairValue(1.0));
  PairValue xpow(1.0);  // x^{1-k}
  for (int k = 1; k <= terms; ++k) {
    const Rational c = karatsuba_expansion_coeffs[static_cast<std::size_t>(k - 1)];
    poly += xpow * PairValue(static_cast<double>(c.num)) / static_cast<double>(c.den);
    xpow = xpow / x;
  }
  const PairValue lv = log(dd_constants::pi) * 0.5 + xd * (log(xd) - PairValue(1.0)) +
                       log(poly) / 6.0;
  const double value = exp(lv).value();

  double next;
  if (terms < static_cast<int>(karatsuba_expansion_coeffs.size())) {
    next = std::abs(karatsuba_expansion_coeffs[static_cast<std::size_t>(terms)].value()) *
           std::pow(x, -terms);
  } else {
    next = std::abs(karatsuba_expansion_coeffs.back().value()) * std::pow(x, -7.0);
  }
  return {value, value * next / (6.0 * poly.value()), GammaMethod::karatsuba_series};
}

double theta(double x) {
  if (std::isnan(x) || x < 0.0) throw Error(ErrorKind::domain, "theta needs x >= 0");
  if (x == 0.0) return 30.0 / (kPi * kPi * kPi);
  if (x >= 40.0) {
    // The closed form cancels about 2 log10(x) digits here, while the
    // seven-term expansion is already exact to ~1e-12.
    double sum = 0.0;
    for (std::size_t k = karatsuba_expansion_coeffs.size(); k-- > 0;) {
      sum = sum / x + karatsuba_expansion_coeffs[k].value();
    }
    return 30.0 * sum;
  }
  const double s6 = 6.0 * stirling_remainder(x);
  return 30.0 * (8.0 * x * x * x * std::expm1(s6) - 4.0 * x * x - x);
}

namespace {

DeTempleTerms detemple_terms(std::int64_t n, const PairValue& harmonic) {
  const double nd = static_cast<double>(n);
  DeTempleTerms t;
  t.n = n;
  t.d_n = (harmonic - log(PairValue(nd))).value();
  const PairValue r = harmonic - log(PairValue(nd + 0.5));
  t.r_n = r.value();
  t.r_minus_gamma = (r - constants::euler_gamma_dd).value();
  t.big_h = t.r_minus_gamma * nd * nd;
  return t;
}

}  // namespace

DeTempleTerms detemple(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::domain, "detemple needs n >= 1");
  PairValue h;
  for (std::int64_t k = 1; k <= n; ++k) h += PairValue(1.0) / static_cast<double>(k);
  return detemple_terms(n, h);
}

std::vector<DeTempleTerms> detemple_range(std::int64_t n_max) {
  if (n_max < 1) throw Error(ErrorKind::domain, "detemple_range needs n_max >= 1");
  std::vector<DeTempleTerms> out;
  out.reserve(static_cast<std::size_t>(n_max));
  PairValue h;
  for (std::int64_t k = 1; k <= n_max; ++k) {
    h += PairValue(1.0) / static_cast<double>(k);
    out.push_back(detemple_terms(k, h));
  }
  return out;
}

GammaEstimate detemple_euler_gamma(std::int64_t n) {
  const DeTempleTerms t = detemple(n);
  const double nd = static_cast<double>(n);
  return {t.r_n, 1.0 / (24.0 * nd * nd), GammaMethod::detemple};
}

GammaEstimate harmonic_euler_gamma(std::int64_t n) {
  const DeTempleTerms t = detemple(n);
  return {t.d_n, 1.0 / (2.0 * static_cast<double>(n)), GammaMethod::direct_harmonic};
}

double karatsuba_bound(int k) {
  if (k < 1) throw Error(ErrorKind::range, "karatsuba_bound needs k >= 1");
  const double kd = k;
  return std::exp(constants::log2 - log_gamma(12.0 * kd + 1.0)) + 2.0 * kd * kd * std::exp(-kd);
}

GammaEstimate karatsuba_euler_gamma(int k) {
  if (k < 1 || k > 200) throw Error(ErrorKind::range, "karatsuba_euler_gamma needs 1 <= k <= 200");
  const double kd = k;
  const int r_max = 12 * k + 1;
  PairValue d = PairValue(kd * kd) / 2.0;  // d(k, 1)
  PairValue s1;
  PairValue s2;
  double peak = 0.0;
  for (int r = 1; r <= r_max; ++r) {
    s1 += d;
    s2 += d / static_cast<double>(r + 1);
    peak = std::max(peak, std::abs(d.hi));
    d = d * (-kd) * static_cast<double>(r + 1) / (static_cast<double>(r) * (r + 2));
  }
  const PairValue value = PairValue(1.0) - log(PairValue(kd)) * s1 + s2;
  // The alternating sums cancel down from `peak`; double-double keeps
  // about 2^-104 of it.
  const double rounding = peak * r_max * std::ldexp(1.0, -100) +
                          std::numeric_limits<double>::epsilon() * std::abs(value.hi);
  return {value.value(), karatsuba_bound(k) + rounding, GammaMethod::karatsuba_series};
}

double mono_f(double x) {
  if (std::isnan(x) || !(x > 0.0)) throw Error(ErrorKind::domain, "mono_f needs x > 0");
  if (x == 1.0) return 1.0 - kEulerGamma;
  const double t = x - 1.0;
  if (std::abs(t) <= 0.25) {
    return lgamma2p_over_t(t) / ((1.0 + t) * (std::log1p(t) / t));
  }
  if (x <= 0.25) return lgamma1p_series(x) / (x * std::log(x));
  return log_gamma(x + 1.0) / (x * std::log(x));
}

double lemma_g(double x) {
  if (std::isnan(x) || !(x > -1.0)) throw Error(ErrorKind::domain, "lemma_g needs x > -1");
  const auto n_terms = static_cast<std::int64_t>(std::max(1000.0, std::ceil(50.0 * (1.0 + x))));
  CompensatedSum acc;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const double nd = static_cast<double>(n);
    const double s = nd + x;
    acc.add((nd - x) / (s * s * s));
  }
  // Euler-Maclaurin tails: Σ_{n>N} 1/(n+x)^2 = Ψ'(y), Σ_{n>N} 1/(n+x)^3 = -Ψ''(y)/2
  const double y = static_cast<double>(n_terms) + 1.0 + x;
  const double z = 1.0 / y;
  const double z2 = z * z;
  const double tail2 = z + z2 * (0.5 + z * (1.0 / 6 + z2 * (-1.0 / 30 + z2 * (1.0 / 42))));
  const double tail3 = z2 * (0.5 + z * (0.5 + z * (0.25 + z2 * (-1.0 / 12 + z2 * (1.0 / 12)))));
  acc.add(tail2);
  acc.add(-2.0 * x * tail3);
  return acc.value();
}

double lemma_h(double x) {
  if (std::isnan(x) || !(x > -1.0)) throw Error(ErrorKind::domain, "lemma_h needs x > -1");
  if (x == 0.0) return 0.0;
  if (std::abs(x) <= 0.5) {
    // Σ_{k≥2} (-1)^k ζ(k) (k-1)^2 / k x^k
    double sum = 0.0;
    double xk = x;
    for (int k = 2; k <= 80; ++k) {
      xk *= -x;  // (-1)^{k-1} x^k
      const double term = (1.0 + zeta_minus_one(k)) * (k - 1.0) * (k - 1.0) / k * xk;
      sum -= term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  const double y = 1.0 + x;
  return x * x * trigamma(y) - x * digamma(y) + log_gamma(y);
}

}  // namespace specfun
