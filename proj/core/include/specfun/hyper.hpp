#pragma once

namespace specfun {

struct HyperParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

enum class HyperMethod {
  direct_series,
  near_one_expansion,    // zero-balanced logarithmic expansion in 1 - x
  reflection_transform,  // (1-x)^{c-a-b} F(c-a, c-b; c; x)
  gauss_limit,           // F(a,b;c;1) as a gamma quotient
  ode_continuation,      // Taylor stepping of the ODE toward x = 1
};

const char* to_string(HyperMethod m);

struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  int terms_used = 0;
  HyperMethod method = HyperMethod::direct_series;
};

// Rising factorial a(a+1)...(a+n-1).
double pochhammer(double a, int n);

// F(a,b;c;x) for x in [0,1).  Parameters: a, b >= 0, or one of them in
// (-1, 0) when c >= 1; c must be positive.
EvalResult f21(const HyperParams& p, double x);

// Same evaluator with the parameter rule relaxed to any finite a, b and
// c > 0.  Used by the identity residuals, whose shifted parameters leave
// the public window.
EvalResult f21_relaxed(const HyperParams& p, double x);

// F(a,b;c;1-y) for y in [0,1], with y carried exactly so that points next
// to the singular end keep full resolution.  Relaxed parameter rule.
EvalResult f21_complement(const HyperParams& p, double y);

// Same, for callers that only know log y (y may underflow).  Only the
// zero-balanced expansion and the small-y limits need log y.
EvalResult f21_complement_log(const HyperParams& p, double y, double log_y);

// F(a,b;c;1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)), c > a + b.
double gauss_value_at_one(const HyperParams& p);

// R(a,b) = -2γ - Ψ(a) - Ψ(b)
double ramanujan_R(double a, double b);
double ramanujan_R(double a);  // R(a, 1-a)

// B(a,b) F(a,b;a+b;1-y) + log y - R(a,b)
double zero_balanced_gap(double a, double b, double y);

enum class ContiguousRelation { d_u, d_v, shift_c, sym_combo, b_shift };

const char* to_string(ContiguousRelation r);

// LHS - RHS of the selected contiguous relation with u = F(a-1,b;c;z),
// v = F(a,b;c;z).  d_u, d_v, sym_combo and b_shift differentiate by stencil.
double contiguous_residual(ContiguousRelation id, const HyperParams& p, double z);

// u v1 + u1 v - v v1 with b = 1 - a, u1 = u(1-z), v1 = v(1-z).
double corollary44_value(double a, double c, double z);
// Γ(c)^2 / (Γ(c+a-1) Γ(c-a+1))
double corollary44_constant(double a, double c);

// (c-a)(u v1 + u1 v) + (a-1) v v1 - A (z(1-z))^{1-c}, A = Γ(c)^2/(Γ(a)Γ(b)).
// Requires 2c = a + b + 1 to 1e-12, a, b > 0, c >= 1.
double wronskian_combo_residual(const HyperParams& p, double z);

// W(w1, w2) z^c (1-z)^{a+b-c+1} for w1 = F(a,b;c;z), w2 = F(a,b;a+b+1-c;1-z).
double wronskian_scaled(const HyperParams& p, double z);

// F1 F2 + F3 F4 - F2 F3 minus the gamma quotient; a, b, c >= 0.
double elliott_residual(double a, double b, double c, double x);

// Two-product identity minus D x^{-c} (1-x)^{c-a-b-1}, scaled by max(1, |D x^{-c}(1-x)^{c-a-b-1}|).
double kummer_residual(double a, double b, double c, double x);

// 3F2(-n, a, b; 1+a+b, 1+eps-n; 1), exact terminating sum.
double f32_terminating(int n, double a, double b, double eps);

// z(1-z) w'' + [c - (a+b+1) z] w' - ab w for w = F(a,b;c;z), stencil derivatives.
double hypergeometric_ode_residual(const HyperParams& p, double z);

// Residual of the equation satisfied by w(z) = F(a,b;c;sqrt(1-z^2)), z in (0,1).
double lemniscate_ode_residual(const HyperParams& p, double z);

// k(x) = F(a,b;a+b;1-e^{-x}) and its exact derivative.
double k_function(double a, double b, double x);
double k_derivative(double a, double b, double x);

// l(x) = F(a,b;c;1-(1+x)^{-1/d}), d = a + b - c > 0, and its exact derivative.
double l_function(const HyperParams& p, double x);
double l_derivative(const HyperParams& p, double x);

// R(x, 1-x) sin(πx)
double ramanujan_R_sin(double x);

}  // namespace specfun
