#pragma once

namespace specfun {

// A modulus r together with its complement r' = √(1-r²).  Both coordinates
// are stored so that points next to either end keep full relative accuracy.
struct ModulusPoint {
  double r = 0.0;
  double r_prime = 1.0;

  static ModulusPoint from_r(double r);
  static ModulusPoint from_r_prime(double r_prime);
  ModulusPoint complement() const { return {r_prime, r}; }
};

struct SignatureParam {
  double a = 0.5;

  explicit SignatureParam(double a);
};

inline const SignatureParam kClassicalSignature{0.5};

double agm(double x, double y);

// Classical complete integrals.  K on [0,1) (overflow error at r = 1),
// E on [0,1].  The primed forms evaluate at r'.
double ellip_k(double r);
double ellip_e(double r);
double ellip_kp(double r);
double ellip_ep(double r);
double ellip_k(const ModulusPoint& p);
double ellip_e(const ModulusPoint& p);

// Generalized integrals K_a = (π/2) F(a,1-a;1;r²), E_a = (π/2) F(a-1,1-a;1;r²).
double k_a(SignatureParam s, double r);
double e_a(SignatureParam s, double r);
double kp_a(SignatureParam s, double r);
double ep_a(SignatureParam s, double r);
double k_a(SignatureParam s, const ModulusPoint& p);
double e_a(SignatureParam s, const ModulusPoint& p);

// μ_a(r) = (π / (2 sin πa)) K_a(r') / K_a(r), a decreasing map of (0,1) onto (0,∞).
double mu_a(SignatureParam s, double r);
double mu(double r);
double mu_a(SignatureParam s, const ModulusPoint& p);
// μ_a at r = e^{log_r}, for moduli below the binary64 range of r².
double mu_a_log(SignatureParam s, double log_r);

// μ_a(1/√2) = π / (2 sin πa)
double mu_a_center(SignatureParam s);

// φ_K^a(r) = μ_a^{-1}(μ_a(r) / K).  The point form keeps both coordinates of
// the result accurate, which the modular identities need near s = 0.
ModulusPoint phi_k_a_point(SignatureParam s, double K, const ModulusPoint& p);
double phi_k_a(SignatureParam s, double K, double r);
double phi_k(double K, double r);

// E K' + E' K - K K' - π/2
double legendre_residual(double r);
// E_a K_a' + E_a' K_a - K_a K_a' - π sin(πa) / (4(1-a))
double generalized_legendre_residual(SignatureParam s, double r);

// Perimeter of the ellipse with semi-axes 1 and b, and two closed-form estimates.
double ellipse_perimeter(double b);
double muir_approx(double b);
double upper_approx(double b);

enum class EllipticOde { ka_ode, ea_ode, lemniscate_ode };

const char* to_string(EllipticOde which);

inline constexpr double kOdeGuard = 0.05;

// Stencil residual of the selected differential equation at r in (δ, 1-δ).
double ode_residual(EllipticOde which, SignatureParam s, double r);

inline constexpr double kSchwarzianStep = 5e-3;

// S_{μ_a}(r) minus the closed form, r in (0.1, 0.9).  `step` is taken in
// t = log(r/r'); the third derivative uses the O(h²) stencil, so halving
// the step cuts the residual about fourfold.
double schwarzian_residual(SignatureParam s, double r);
double schwarzian_residual(SignatureParam s, double r, double step);
// -8a(1-a)/r'² + (1 + 6r² - 3r⁴) / (2 r² r'⁴)
double schwarzian_rhs(SignatureParam s, double r);

}  // namespace specfun
