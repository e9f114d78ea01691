#include "specfun/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specfun/gamma.hpp"
#include "specfun/kernel.hpp"

namespace specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kCrossover = 0.75;
constexpr double kRelStop = 1e-17;
constexpr int kStopRun = 3;
constexpr int kSeriesCap = 100000;
constexpr double kOdeStart = 0.5;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Point z = x = 1 - y with both coordinates carried.
struct Arg {
  double x;
  double y;
  double log_y;
};

Arg from_x(double x) { return {x, 1.0 - x, std::log1p(-x)}; }

// Stopping rule shared by every series: three consecutive terms below
// kRelStop relative to the partial sum.
struct StopRule {
  int run = 0;
  bool done(double term, double partial) {
    if (term == 0.0) return true;
    run = std::abs(term) < kRelStop * std::abs(partial) ? run + 1 : 0;
    return run >= kStopRun;
  }
};

EvalResult direct_series(double a, double b, double c, double x) {
  CompensatedSum sum;
  sum.add(1.0);
  double partial = 1.0;
  double abs_sum = 1.0;
  double term = 1.0;
  StopRule stop;
  int n = 0;
  bool capped = true;
  for (; n < kSeriesCap; ++n) {
    term *= ((a + n) / (n + 1.0)) * ((b + n) / (c + n)) * x;
    sum.add(term);
    partial += term;
    abs_sum += std::abs(term);
    if (stop.done(term, partial)) {
      capped = false;
      ++n;
      break;
    }
  }
  const double value = sum.value();
  double err = 4.0 * kEps * abs_sum + kRelStop * std::abs(value);
  if (capped) err += std::abs(term);
  return {value, err, n + 1, HyperMethod::direct_series};
}

// 1 / B(a,b) = Γ(a+b) / (Γ(a) Γ(b)) for any non-pole a, b.
double inverse_beta(double a, double b) {
  if (a > 0.0 && b > 0.0) return 1.0 / beta(a, b);
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return 0.0;
  int sab = 1;
  int sa = 1;
  int sb = 1;
  const double l = log_abs_gamma(a + b, sab) - log_abs_gamma(a, sa) - log_abs_gamma(b, sb);
  return sab * sa * sb * std::exp(l);
}

EvalResult zero_balanced_near_one(double a, double b, const Arg& z) {
  const double pref = inverse_beta(a, b);
  double psi1 = -constants::euler_gamma;
  double psia = digamma(a);
  double psib = digamma(b);
  double coef = 1.0;
  CompensatedSum sum;
  double partial = 0.0;
  double abs_sum = 0.0;
  StopRule stop;
  int n = 0;
  for (; n < kSeriesCap; ++n) {
    const double term = coef * (2.0 * psi1 - psia - psib - z.log_y);
    sum.add(term);
    partial += term;
    abs_sum += std::abs(term);
    if (n > 0 && stop.done(term, partial)) break;
    psi1 += 1.0 / (n + 1.0);
    psia += 1.0 / (a + n);
    psib += 1.0 / (b + n);
    coef *= ((a + n) / (n + 1.0)) * ((b + n) / (n + 1.0)) * z.y;
    if (coef == 0.0) break;
  }
  const double value = pref * sum.value();
  return {value, std::abs(pref) * (8.0 * kEps * abs_sum) + kRelStop * std::abs(value), n + 1,
          HyperMethod::near_one_expansion};
}

double gauss_quotient(double a, double b, double c) {
  const double s = c - a - b;
  if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) return 0.0;
  if (c < 170.0 && s < 170.0 && c - a < 170.0 && c - b < 170.0 && c - a > 0.0 && c - b > 0.0 &&
      std::min(s, std::min(c - a, c - b)) > 1e-3) {
    return (gamma(c) / gamma(c - a)) * (gamma(s) / gamma(c - b));
  }
  int s1 = 1;
  int s2 = 1;
  int s3 = 1;
  int s4 = 1;
  const double l = log_abs_gamma(c, s1) + log_abs_gamma(s, s2) - log_abs_gamma(c - a, s3) -
                   log_abs_gamma(c - b, s4);
  return s1 * s2 * s3 * s4 * std::exp(l);
}

// Taylor continuation of the hypergeometric ODE from x = 1/2 toward x = 1,
// halving the distance to the singular point at every step so that each
// local series converges with ratio at most 1/2.  Distances are tracked
// directly, so the final point 1 - y is never formed by subtraction.
EvalResult ode_continuation(double a, double b, double c, const Arg& z) {
  const double s = c - a - b;
  const EvalResult f0 = direct_series(a, b, c, kOdeStart);
  const EvalResult fp0 = direct_series(a + 1.0, b + 1.0, c + 1.0, kOdeStart);
  double f = f0.value;
  double d = 1.0 - kOdeStart;
  double fp_scaled = (a * b / c) * fp0.value * d;  // F'(x) (1 - x)
  int terms = f0.terms_used + fp0.terms_used;
  int steps = 0;
  double magnitude = std::max(std::abs(f), 1.0);

  while (d > z.y) {
    const double d_next = std::max(0.5 * d, z.y);
    const double h = d - d_next;
    const double x0 = 1.0 - d;
    const double lead = x0 * d;
    const double lin = 2.0 * d - 1.0;
    const double con = (s - 1.0) + (a + b + 1.0) * d;

    double e0 = f;
    double e1 = fp_scaled * (h / d);
    double value = e0 + e1;
    double slope = e1;  // Σ k e_k
    StopRule stop;
    for (int k = 0; k < 2000; ++k) {
      const double e2 = (-(lin * k + con) * (k + 1.0) * e1 * h + (k + a) * (k + b) * e0 * h * h) /
                        (lead * (k + 2.0) * (k + 1.0));
      value += e2;
      slope += (k + 2.0) * e2;
      ++terms;
      e0 = e1;
      e1 = e2;
      if (k > 2 && stop.done(e2, value)) break;
    }
    f = value;
    fp_scaled = slope * (d_next / h);
    d = d_next;
    magnitude = std::max(magnitude, std::abs(f));
    ++steps;
  }
  const double err = (f0.abs_err_estimate + 8.0 * kEps * magnitude) * (steps + 1);
  return {f, err, terms, HyperMethod::ode_continuation};
}

EvalResult evaluate(double a, double b, double c, const Arg& z) {
  if (z.x == 0.0 || a == 0.0 || b == 0.0) return {1.0, 0.0, 1, HyperMethod::direct_series};
  if (z.x <= kCrossover || is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return direct_series(a, b, c, z.x);
  }
  const double s = c - a - b;
  const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(s) <= 8.0 * kEps * scale) return zero_balanced_near_one(a, b, z);
  if (s < 0.0) {
    EvalResult inner = evaluate(c - a, c - b, c, z);
    const double factor = std::exp(s * z.log_y);
    inner.value *= factor;
    inner.abs_err_estimate = inner.abs_err_estimate * factor + 2.0 * kEps * std::abs(inner.value);
    inner.method = HyperMethod::reflection_transform;
    return inner;
  }
  // Past this distance F(1-y) agrees with F(1) to working precision.
  const double gap = std::exp(std::min(s, 1.0) * z.log_y) * (1.0 + std::abs(z.log_y)) *
                     (1.0 + std::abs(a * b));
  if (z.y == 0.0 || gap < kRelStop) {
    const double v = gauss_quotient(a, b, c);
    return {v, 4.0 * kEps * std::abs(v) * (1.0 + std::abs(std::log(std::abs(v) + 1e-300))), 0,
            HyperMethod::gauss_limit};
  }
  return ode_continuation(a, b, c, z);
}

void check_c(double c) {
  if (!std::isfinite(c)) throw Error(ErrorKind::parameter, "c must be finite");
  if (is_nonpositive_integer(c)) throw Error(ErrorKind::parameter, "c is a nonpositive integer");
  if (!(c > 0.0)) throw Error(ErrorKind::parameter, "negative c is not supported");
}

void check_relaxed(const HyperParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b)) throw Error(ErrorKind::parameter, "a and b must be finite");
  check_c(p.c);
}

void check_strict(const HyperParams& p) {
  check_relaxed(p);
  const bool a_ok = p.a >= 0.0;
  const bool b_ok = p.b >= 0.0;
  if (a_ok && b_ok) return;
  const bool a_ellipse = p.a > -1.0 && p.a < 0.0;
  const bool b_ellipse = p.b > -1.0 && p.b < 0.0;
  if (p.c >= 1.0 && ((a_ellipse && b_ok) || (b_ellipse && a_ok))) return;
  throw Error(ErrorKind::parameter,
              "f21 needs a, b >= 0, or one of them in (-1, 0) with c >= 1");
}

void check_x(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw Error(ErrorKind::domain, "f21 needs x in [0, 1)");
}

}  // namespace

const char* to_string(HyperMethod m) {
  switch (m) {
    case HyperMethod::direct_series: return "direct_series";
    case HyperMethod::near_one_expansion: return "near_one_expansion";
    case HyperMethod::reflection_transform: return "reflection_transform";
    case HyperMethod::gauss_limit: return "gauss_limit";
    case HyperMethod::ode_continuation: return "ode_continuation";
  }
  return "unknown";
}

double pochhammer(double a, int n) {
  if (n < 0) throw Error(ErrorKind::domain, "pochhammer needs n >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  if (!std::isfinite(p)) throw Error(ErrorKind::overflow, "pochhammer overflows binary64");
  return p;
}

EvalResult f21(const HyperParams& p, double x) {
  check_strict(p);
  check_x(x);
  return evaluate(p.a, p.b, p.c, from_x(x));
}

EvalResult f21_relaxed(const HyperParams& p, double x) {
  check_relaxed(p);
  check_x(x);
  return evaluate(p.a, p.b, p.c, from_x(x));
}

EvalResult f21_complement(const HyperParams& p, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw Error(ErrorKind::domain, "f21_complement needs y in [0, 1]");
  return f21_complement_log(p, y, std::log(y));
}

EvalResult f21_complement_log(const HyperParams& p, double y, double log_y) {
  check_relaxed(p);
  if (!(y >= 0.0 && y <= 1.0)) throw Error(ErrorKind::domain, "f21_complement needs y in [0, 1]");
  if (y == 0.0 && !std::isfinite(log_y)) {
    if (!(p.c - p.a - p.b > 0.0)) {
      throw Error(ErrorKind::domain, "F(a,b;c;1) diverges unless c > a + b");
    }
  }
  return evaluate(p.a, p.b, p.c, Arg{1.0 - y, y, log_y});
}

double gauss_value_at_one(const HyperParams& p) {
  check_relaxed(p);
  if (!(p.c > p.a + p.b)) throw Error(ErrorKind::domain, "F(a,b;c;1) needs c > a + b");
  if (p.a == 0.0 || p.b == 0.0) return 1.0;
  return gauss_quotient(p.a, p.b, p.c);
}

double ramanujan_R(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::domain, "R(a,b) needs a, b > 0");
  return -2.0 * constants::euler_gamma - digamma(a) - digamma(b);
}

double ramanujan_R(double a) { return ramanujan_R(a, 1.0 - a); }

double zero_balanced_gap(double a, double b, double y) {
  if (!(y > 0.0 && y < 1.0)) throw Error(ErrorKind::domain, "zero_balanced_gap needs y in (0, 1)");
  const double f = f21_complement({a, b, a + b}, y).value;
  return beta(a, b) * f + std::log(y) - ramanujan_R(a, b);
}

const char* to_string(ContiguousRelation r) {
  switch (r) {
    case ContiguousRelation::d_u: return "d_u";
    case ContiguousRelation::d_v: return "d_v";
    case ContiguousRelation::shift_c: return "shift_c";
    case ContiguousRelation::sym_combo: return "sym_combo";
    case ContiguousRelation::b_shift: return "b_shift";
  }
  return "unknown";
}

namespace {

double F(double a, double b, double c, double x) { return f21_relaxed({a, b, c}, x).value; }
// F(a,b;c;1-y)
double Fc(double a, double b, double c, double y) { return f21_complement({a, b, c}, y).value; }

constexpr Interval kUnitInterval{0.0, 1.0};

void check_interior(double z) {
  if (!(z > 0.0 && z < 1.0)) throw Error(ErrorKind::domain, "argument must lie in (0, 1)");
}

}  // namespace

double contiguous_residual(ContiguousRelation id, const HyperParams& p, double z) {
  check_relaxed(p);
  check_interior(z);
  const double a = p.a;
  const double b = p.b;
  const double c = p.c;
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorKind::parameter, "contiguous relations need a, b > 0");
  auto u = [&](double t) { return F(a - 1.0, b, c, t); };
  auto v = [&](double t) { return F(a, b, c, t); };
  switch (id) {
    case ContiguousRelation::d_u: {
      const double du = derivative(u, z, 1, default_derivative_step(1, z), kUnitInterval);
      return z * du - (a - 1.0) * (v(z) - u(z));
    }
    case ContiguousRelation::d_v: {
      const double dv = derivative(v, z, 1, default_derivative_step(1, z), kUnitInterval);
      return z * (1.0 - z) * dv - ((c - a) * u(z) + (a - c + b * z) * v(z));
    }
    case ContiguousRelation::shift_c:
      return (a * b / c) * z * (1.0 - z) * F(a + 1.0, b + 1.0, c + 1.0, z) -
             ((c - a) * u(z) + (a - c + b * z) * v(z));
    case ContiguousRelation::sym_combo: {
      auto combo = [&](double t) {
        const double ut = u(t);
        const double vt = v(t);
        const double u1 = Fc(a - 1.0, b, c, t);
        const double v1 = Fc(a, b, c, t);
        return ut * v1 + u1 * vt - vt * v1;
      };
      const double dw = derivative(combo, z, 1, default_derivative_step(1, z), kUnitInterval);
      const double uz = u(z);
      const double vz = v(z);
      const double u1 = Fc(a - 1.0, b, c, z);
      const double v1 = Fc(a, b, c, z);
      return z * (1.0 - z) * dw -
             (1.0 - a - b) * ((1.0 - z) * uz * v1 - z * u1 * vz - (1.0 - 2.0 * z) * vz * v1);
    }
    case ContiguousRelation::b_shift: {
      const double dv = derivative(v, z, 1, default_derivative_step(1, z), kUnitInterval);
      return z * (1.0 - z) * dv - ((c - b) * F(a, b - 1.0, c, z) + (b - c + a * z) * v(z));
    }
  }
  throw Error(ErrorKind::unknown_id, "unknown contiguous relation");
}

double corollary44_value(double a, double c, double z) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorKind::domain, "corollary44_value needs a in (0, 1)");
  const double b = 1.0 - a;
  if (!(c > b)) throw Error(ErrorKind::domain, "corollary44_value needs c > 1 - a");
  check_interior(z);
  const double u = F(a - 1.0, b, c, z);
  const double v = F(a, b, c, z);
  const double u1 = Fc(a - 1.0, b, c, z);
  const double v1 = Fc(a, b, c, z);
  return u * v1 + u1 * v - v * v1;
}

double corollary44_constant(double a, double c) {
  const double g = gamma(c);
  return g * g / (gamma(c + a - 1.0) * gamma(c - a + 1.0));
}

double wronskian_combo_residual(const HyperParams& p, double z) {
  check_relaxed(p);
  check_interior(z);
  const double a = p.a;
  const double b = p.b;
  const double c = p.c;
  if (std::abs(2.0 * c - (a + b + 1.0)) > 1e-12) {
    throw Error(ErrorKind::constraint, "the Wronskian combination needs 2c = a + b + 1");
  }
  if (!(a > 0.0 && b > 0.0 && c >= 1.0)) {
    throw Error(ErrorKind::constraint, "the Wronskian combination needs a, b > 0 and c >= 1");
  }
  const double u = F(a - 1.0, b, c, z);
  const double v = F(a, b, c, z);
  const double u1 = Fc(a - 1.0, b, c, z);
  const double v1 = Fc(a, b, c, z);
  const double gc = gamma(c);
  const double big_a = gc * gc / (gamma(a) * gamma(b));
  const double lhs = (c - a) * (u * v1 + u1 * v) + (a - 1.0) * v * v1;
  return lhs - big_a * std::pow(z * (1.0 - z), 1.0 - c);
}

double wronskian_scaled(const HyperParams& p, double z) {
  check_relaxed(p);
  check_interior(z);
  const double a = p.a;
  const double b = p.b;
  const double c = p.c;
  const double c2 = a + b + 1.0 - c;
  const double w1 = F(a, b, c, z);
  const double w1p = (a * b / c) * F(a + 1.0, b + 1.0, c + 1.0, z);
  const double w2 = Fc(a, b, c2, z);
  const double w2p = -(a * b / c2) * Fc(a + 1.0, b + 1.0, c2 + 1.0, z);
  const double w = w1 * w2p - w2 * w1p;
  return w * std::pow(z, c) * std::pow(1.0 - z, a + b - c + 1.0);
}

double elliott_residual(double a, double b, double c, double x) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0)) throw Error(ErrorKind::domain, "Elliott's identity needs a, b, c >= 0");
  check_interior(x);
  const double f1 = F(0.5 + a, -0.5 - c, 1.0 + a + b, x);
  const double f2 = Fc(0.5 - a, 0.5 + c, 1.0 + b + c, x);
  const double f3 = F(0.5 + a, 0.5 - c, 1.0 + a + b, x);
  const double f4 = Fc(-0.5 - a, 0.5 + c, 1.0 + b + c, x);
  const double rhs = (gamma(a + b + 1.0) / gamma(a + b + c + 1.5)) * (gamma(b + c + 1.0) / gamma(b + 0.5));
  return f1 * f2 + f3 * f4 - f2 * f3 - rhs;
}

double kummer_residual(double a, double b, double c, double x) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw Error(ErrorKind::domain, "Kummer's formula needs a, b, c > 0");
  check_interior(x);
  const double e = a + b - c + 1.0;
  if (is_nonpositive_integer(e)) throw Error(ErrorKind::parameter, "a + b - c + 1 is a pole of the gamma factor");
  const double lhs = Fc(a, b, e, x) * F(a + 1.0, b + 1.0, c + 1.0, x) +
                     c / e * F(a, b, c, x) * Fc(a + 1.0, b + 1.0, e + 1.0, x);
  int s1 = 1;
  int s2 = 1;
  int s3 = 1;
  int s4 = 1;
  const double log_d = log_abs_gamma(e, s1) + log_abs_gamma(c + 1.0, s2) - log_abs_gamma(a + 1.0, s3) -
                       log_abs_gamma(b + 1.0, s4);
  const double rhs = s1 * s2 * s3 * s4 *
                     std::exp(log_d - c * std::log(x) + (c - a - b - 1.0) * std::log1p(-x));
  return (lhs - rhs) / std::max(1.0, std::abs(rhs));
}

double f32_terminating(int n, double a, double b, double eps) {
  if (n < 1) throw Error(ErrorKind::domain, "f32_terminating needs n >= 1");
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorKind::domain, "f32_terminating needs a, b > 0");
  if (!(eps > a * b / (1.0 + a + b) && eps < 1.0)) {
    throw Error(ErrorKind::constraint, "eps must satisfy ab/(1+a+b) < eps < 1");
  }
  const double d1 = 1.0 + a + b;
  const double d2 = 1.0 + eps - n;
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    term *= ((k - n) / (k + 1.0)) * ((a + k) / (d1 + k)) * ((b + k) / (d2 + k));
    sum.add(term);
  }
  return sum.value();
}

double hypergeometric_ode_residual(const HyperParams& p, double z) {
  check_relaxed(p);
  check_interior(z);
  auto w = [&](double t) { return F(p.a, p.b, p.c, t); };
  const double w0 = w(z);
  const double w1 = derivative(w, z, 1, default_derivative_step(1, z), kUnitInterval);
  const double w2 = derivative(w, z, 2, default_derivative_step(2, z), kUnitInterval);
  return z * (1.0 - z) * w2 + (p.c - (p.a + p.b + 1.0) * z) * w1 - p.a * p.b * w0;
}

double lemniscate_ode_residual(const HyperParams& p, double z) {
  check_relaxed(p);
  check_interior(z);
  // 1 - sqrt(1 - t^2) = t^2 / (1 + sqrt(1 - t^2)) without cancellation
  auto one_minus_big_z = [](double t) {
    return t * t / (1.0 + std::sqrt((1.0 - t) * (1.0 + t)));
  };
  auto w = [&](double t) { return Fc(p.a, p.b, p.c, one_minus_big_z(t)); };
  const double w0 = w(z);
  const double w1 = derivative(w, z, 1, default_derivative_step(1, z), kUnitInterval);
  const double w2 = derivative(w, z, 2, default_derivative_step(2, z), kUnitInterval);
  const double y = one_minus_big_z(z);
  const double big_z = 1.0 - y;
  const double z3 = z * z * z;
  return big_z * big_z * big_z * y * z * w2 -
         (big_z * y + (p.c - (p.a + p.b + 1.0) * big_z) * big_z * z * z) * w1 -
         p.a * p.b * z3 * w0;
}

double k_function(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorKind::domain, "k needs a, b > 0");
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "k needs x > 0");
  return Fc(a, b, a + b, std::exp(-x));
}

double k_derivative(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorKind::domain, "k needs a, b > 0");
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "k needs x > 0");
  // F'(z) e^{-x} with F(a+1,b+1;a+b+1;z) reflected onto F(b,a;a+b+1;z)/(1-z)
  return a * b / (a + b) * Fc(a, b, a + b + 1.0, std::exp(-x));
}

double l_function(const HyperParams& p, double x) {
  const double d = p.a + p.b - p.c;
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0 && d > 0.0)) {
    throw Error(ErrorKind::domain, "l needs a, b, c > 0 and a + b > c");
  }
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "l needs x > 0");
  return Fc(p.a, p.b, p.c, std::pow(1.0 + x, -1.0 / d));
}

double l_derivative(const HyperParams& p, double x) {
  const double d = p.a + p.b - p.c;
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0 && d > 0.0)) {
    throw Error(ErrorKind::domain, "l needs a, b, c > 0 and a + b > c");
  }
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "l needs x > 0");
  return p.a * p.b / (p.c * d) * Fc(p.c - p.a, p.c - p.b, p.c + 1.0, std::pow(1.0 + x, -1.0 / d));
}

double ramanujan_R_sin(double x) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::domain, "R(x) sin(pi x) needs x in (0, 1)");
  return ramanujan_R(x, 1.0 - x) * sinpi(x);
}

}  // namespace specfun
