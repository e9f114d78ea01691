#include "specfun/elliptic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "specfun/gamma.hpp"
#include "specfun/hyper.hpp"
#include "specfun/kernel.hpp"

namespace specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = constants::pi;
constexpr int kAgmCap = 64;

// Lowest log-modulus searched by the φ inversion.  Degree 23 at r = 0.05
// needs about -100.
constexpr double kLogModulusFloor = -700.0;

// √(1 - t²) without cancellation near t = 1
double complement_of(double t) { return std::sqrt((1.0 - t) * (1.0 + t)); }

void check_unit_closed(double r, const char* what) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::domain, std::string(what) + " needs r in [0, 1]");
}

void check_unit_open(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, std::string(what) + " needs r in (0, 1)");
}

double k_from_point(const ModulusPoint& p) {
  if (p.r_prime == 0.0) throw Error(ErrorKind::overflow, "K(1) is infinite");
  return kPi / (2.0 * agm(1.0, p.r_prime));
}

double e_from_point(const ModulusPoint& p) {
  if (p.r_prime == 0.0) return 1.0;
  if (p.r == 0.0) return kPi / 2.0;
  double a = 1.0;
  double b = p.r_prime;
  double c = p.r;
  double weight = 0.5;
  CompensatedSum sum;
  sum.add(weight * c * c);
  for (int n = 0; n < kAgmCap; ++n) {
    if (std::abs(a - b) <= 4.0 * kEps * a) {
      return kPi / (2.0 * a) * (1.0 - sum.value());
    }
    const double a_next = 0.5 * (a + b);
    c = c * c / (4.0 * a_next);
    b = std::sqrt(a * b);
    a = a_next;
    weight *= 2.0;
    sum.add(weight * c * c);
  }
  throw Error(ErrorKind::iteration_cap, "AGM did not converge");
}

struct LogPoint {
  double r;
  double r_prime;
  double log_r;
  double log_r_prime;
};

LogPoint with_logs(const ModulusPoint& p) {
  return {p.r, p.r_prime, std::log(p.r), std::log(p.r_prime)};
}

LogPoint from_log_r(double log_r) {
  const double r = std::exp(log_r);
  const double rp2 = -std::expm1(2.0 * log_r);
  return {r, std::sqrt(rp2), log_r, 0.5 * std::log(rp2)};
}

// F(a, b; 1; r²) evaluated from whichever end of (0, 1) is closer.
double hyper_at(double a, double b, const LogPoint& p) {
  const HyperParams hp{a, b, 1.0};
  if (p.r <= p.r_prime) {
    const double x = p.r * p.r;
    if (x == 0.0) return 1.0;
    return f21_relaxed(hp, x).value;
  }
  return f21_complement_log(hp, p.r_prime * p.r_prime, 2.0 * p.log_r_prime).value;
}

double hyper_k(double a, const LogPoint& p) { return hyper_at(a, 1.0 - a, p); }

LogPoint swap(const LogPoint& p) { return {p.r_prime, p.r, p.log_r_prime, p.log_r}; }

double mu_core(double a, const LogPoint& p) {
  return kPi / (2.0 * sinpi(a)) * hyper_k(a, swap(p)) / hyper_k(a, p);
}

// Largest log s on the branch s <= 1/√2.
const double kLogCenter = -0.5 * constants::log2;

// Solve μ_a(e^{ls}) = target for ls, target >= μ_a(1/√2).
double solve_log_modulus(double a, double target) {
  auto f = [a](double ls) { return mu_core(a, from_log_r(ls)); };
  const double top = f(kLogModulusFloor);
  if (target > top) {
    throw Error(ErrorKind::bracket, "μ_a target " + std::to_string(target) +
                                        " exceeds the saturating value at r = exp(" +
                                        std::to_string(kLogModulusFloor) + ")");
  }
  const double tol = 1e-14 * std::max(1.0, target);
  return invert_monotone(f, target, kLogModulusFloor, kLogCenter, tol).root;
}

double stencil_guarded(double r, double lo, double hi, const char* what) {
  if (!(r > lo && r < hi)) {
    throw Error(ErrorKind::domain, std::string(what) + " is restricted to (" + std::to_string(lo) +
                                       ", " + std::to_string(hi) + ")");
  }
  return r;
}

}  // namespace

ModulusPoint ModulusPoint::from_r(double r) {
  check_unit_closed(r, "ModulusPoint");
  return {r, complement_of(r)};
}

ModulusPoint ModulusPoint::from_r_prime(double r_prime) {
  check_unit_closed(r_prime, "ModulusPoint");
  return {complement_of(r_prime), r_prime};
}

SignatureParam::SignatureParam(double value) : a(value) {
  if (!(value > 0.0 && value < 1.0)) throw Error(ErrorKind::domain, "signature parameter a must lie in (0, 1)");
}

double agm(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw Error(ErrorKind::domain, "agm needs positive arguments");
  if (!std::isfinite(x) || !std::isfinite(y)) throw Error(ErrorKind::domain, "agm needs finite arguments");
  double a = x;
  double b = y;
  for (int n = 0; n < kAgmCap; ++n) {
    if (std::abs(a - b) <= 4.0 * kEps * a) return a;
    const double a_next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = a_next;
  }
  throw Error(ErrorKind::iteration_cap, "AGM did not converge");
}

double ellip_k(double r) {
  if (r == 1.0) throw Error(ErrorKind::overflow, "K(1) is infinite");
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "K needs r in [0, 1)");
  return k_from_point(ModulusPoint::from_r(r));
}

double ellip_e(double r) {
  check_unit_closed(r, "E");
  return e_from_point(ModulusPoint::from_r(r));
}

double ellip_kp(double r) {
  if (r == 0.0) throw Error(ErrorKind::overflow, "K'(0) is infinite");
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::domain, "K' needs r in (0, 1]");
  return k_from_point(ModulusPoint::from_r(r).complement());
}

double ellip_ep(double r) {
  check_unit_closed(r, "E'");
  return e_from_point(ModulusPoint::from_r(r).complement());
}

double ellip_k(const ModulusPoint& p) { return k_from_point(p); }
double ellip_e(const ModulusPoint& p) { return e_from_point(p); }

double k_a(SignatureParam s, const ModulusPoint& p) {
  if (p.r_prime == 0.0) throw Error(ErrorKind::overflow, "K_a(1) is infinite");
  return kPi / 2.0 * hyper_k(s.a, with_logs(p));
}

double e_a(SignatureParam s, const ModulusPoint& p) {
  if (p.r_prime == 0.0) return sinpi(s.a) / (2.0 * (1.0 - s.a));
  return kPi / 2.0 * hyper_at(s.a - 1.0, 1.0 - s.a, with_logs(p));
}

double k_a(SignatureParam s, double r) {
  if (r == 1.0) throw Error(ErrorKind::overflow, "K_a(1) is infinite");
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "K_a needs r in [0, 1)");
  return k_a(s, ModulusPoint::from_r(r));
}

double e_a(SignatureParam s, double r) {
  check_unit_closed(r, "E_a");
  return e_a(s, ModulusPoint::from_r(r));
}

double kp_a(SignatureParam s, double r) {
  if (r == 0.0) throw Error(ErrorKind::overflow, "K_a'(0) is infinite");
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::domain, "K_a' needs r in (0, 1]");
  return k_a(s, ModulusPoint::from_r(r).complement());
}

double ep_a(SignatureParam s, double r) {
  check_unit_closed(r, "E_a'");
  return e_a(s, ModulusPoint::from_r(r).complement());
}

double mu_a(SignatureParam s, const ModulusPoint& p) {
  if (!(p.r > 0.0 && p.r_prime > 0.0)) throw Error(ErrorKind::domain, "μ_a needs r in (0, 1)");
  return mu_core(s.a, with_logs(p));
}

double mu_a(SignatureParam s, double r) {
  check_unit_open(r, "μ_a");
  return mu_a(s, ModulusPoint::from_r(r));
}

double mu(double r) { return mu_a(kClassicalSignature, r); }

double mu_a_log(SignatureParam s, double log_r) {
  if (!(log_r < 0.0) || !std::isfinite(log_r)) throw Error(ErrorKind::domain, "μ_a needs log r < 0");
  return mu_core(s.a, from_log_r(log_r));
}

double mu_a_center(SignatureParam s) { return kPi / (2.0 * sinpi(s.a)); }

ModulusPoint phi_k_a_point(SignatureParam s, double K, const ModulusPoint& p) {
  if (!(K > 0.0) || !std::isfinite(K)) throw Error(ErrorKind::domain, "φ_K needs finite K > 0");
  if (!(p.r > 0.0 && p.r_prime > 0.0)) throw Error(ErrorKind::domain, "φ_K needs r in (0, 1)");
  if (K == 1.0) return p;
  const double target = mu_a(s, p) / K;
  const double center = mu_a_center(s);
  if (target >= center) {
    const LogPoint q = from_log_r(solve_log_modulus(s.a, target));
    return {q.r, q.r_prime};
  }
  // μ_a(s) μ_a(s') = μ_a(1/√2)²
  const LogPoint q = from_log_r(solve_log_modulus(s.a, center * center / target));
  return {q.r_prime, q.r};
}

double phi_k_a(SignatureParam s, double K, double r) {
  check_unit_open(r, "φ_K");
  if (K == 1.0) return r;
  return phi_k_a_point(s, K, ModulusPoint::from_r(r)).r;
}

double phi_k(double K, double r) { return phi_k_a(kClassicalSignature, K, r); }

double legendre_residual(double r) {
  check_unit_open(r, "Legendre's relation");
  const ModulusPoint p = ModulusPoint::from_r(r);
  const ModulusPoint q = p.complement();
  const double k = k_from_point(p);
  const double kp = k_from_point(q);
  const double e = e_from_point(p);
  const double ep = e_from_point(q);
  return e * kp + ep * k - k * kp - kPi / 2.0;
}

double generalized_legendre_residual(SignatureParam s, double r) {
  check_unit_open(r, "the generalized Legendre relation");
  const ModulusPoint p = ModulusPoint::from_r(r);
  const ModulusPoint q = p.complement();
  const double k = k_a(s, p);
  const double kp = k_a(s, q);
  const double e = e_a(s, p);
  const double ep = e_a(s, q);
  return e * kp + ep * k - k * kp - kPi * sinpi(s.a) / (4.0 * (1.0 - s.a));
}

double ellipse_perimeter(double b) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::domain, "ellipse_perimeter needs b in [0, 1]");
  return 4.0 * e_from_point(ModulusPoint::from_r_prime(b));
}

double muir_approx(double b) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::domain, "muir_approx needs b in [0, 1]");
  return 2.0 * kPi * std::pow(0.5 * (1.0 + std::pow(b, 1.5)), 2.0 / 3.0);
}

double upper_approx(double b) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::domain, "upper_approx needs b in [0, 1]");
  return 2.0 * kPi * std::sqrt(0.5 * (1.0 + b * b));
}

const char* to_string(EllipticOde which) {
  switch (which) {
    case EllipticOde::ka_ode: return "ka_ode";
    case EllipticOde::ea_ode: return "ea_ode";
    case EllipticOde::lemniscate_ode: return "lemniscate_ode";
  }
  return "unknown";
}

double ode_residual(EllipticOde which, SignatureParam s, double r) {
  stencil_guarded(r, kOdeGuard, 1.0 - kOdeGuard, "the ODE residual");
  const double a = s.a;
  const Interval unit{0.0, 1.0};
  const double rp2 = (1.0 - r) * (1.0 + r);
  switch (which) {
    case EllipticOde::ka_ode: {
      auto f = [&](double t) { return k_a(s, t); };
      const double d1 = derivative(f, r, 1, default_derivative_step(1, r), unit);
      const double d2 = derivative(f, r, 2, default_derivative_step(2, r), unit);
      return r * rp2 * d2 + (1.0 - 3.0 * r * r) * d1 - 4.0 * a * (1.0 - a) * r * f(r);
    }
    case EllipticOde::ea_ode: {
      auto f = [&](double t) { return e_a(s, t); };
      const double d1 = derivative(f, r, 1, default_derivative_step(1, r), unit);
      const double d2 = derivative(f, r, 2, default_derivative_step(2, r), unit);
      return r * rp2 * d2 + rp2 * d1 + 4.0 * (1.0 - a) * (1.0 - a) * r * f(r);
    }
    case EllipticOde::lemniscate_ode:
      return lemniscate_ode_residual({a, 1.0 - a, 1.0}, r);
  }
  throw Error(ErrorKind::unknown_id, "unknown differential equation");
}

double schwarzian_rhs(SignatureParam s, double r) {
  const double r2 = r * r;
  const double rp2 = (1.0 - r) * (1.0 + r);
  return -8.0 * s.a * (1.0 - s.a) / rp2 + (1.0 + 6.0 * r2 - 3.0 * r2 * r2) / (2.0 * r2 * rp2 * rp2);
}

double schwarzian_residual(SignatureParam s, double r) {
  return schwarzian_residual(s, r, kSchwarzianStep);
}

// The stencil runs in t = log(r/r'), where μ_a is close to linear at both
// ends, and the chain rule S_μ(r) r_t² = S_{μ∘r}(t) - S_r(t) maps it back.
// With dr/dt = r r'², S_r(t) = -(1 - 3r²)²/2 - 6 r² r'².
double schwarzian_residual(SignatureParam s, double r, double step) {
  stencil_guarded(r, 0.1, 0.9, "the Schwarzian residual");
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "step must be positive");
  const double rp2 = (1.0 - r) * (1.0 + r);
  const double t = std::log(r) - 0.5 * std::log(rp2);
  auto g = [&](double u) { return mu_a(s, 1.0 / std::sqrt(1.0 + std::exp(-2.0 * u))); };
  const double d1 = derivative(g, t, 1, step, std::nullopt, StencilAccuracy::fourth);
  const double d2 = derivative(g, t, 2, step, std::nullopt, StencilAccuracy::fourth);
  const double d3 = derivative(g, t, 3, step, std::nullopt, StencilAccuracy::second);
  const double q = d2 / d1;
  const double s_t = d3 / d1 - 1.5 * q * q;
  const double u = 1.0 - 3.0 * r * r;
  const double s_map = -0.5 * u * u - 6.0 * r * r * rp2;
  const double jac = r * rp2;
  return (s_t - s_map) / (jac * jac) - schwarzian_rhs(s, r);
}

}  // namespace specfun
