#include "specfun/modular.hpp"

#include <algorithm>
#include <cmath>

#include "specfun/kernel.hpp"

namespace specfun {

namespace {

constexpr double kForwardTolerance = 1e-10;

ModuliPair pair_of(const ModulusPoint& p, const ModulusPoint& q) {
  return {p.r * p.r, q.r * q.r, p.r_prime * p.r_prime, q.r_prime * q.r_prime};
}

ModulusPoint degree_point(double a, int p, double r) { return solve_modular_point({a, double(p)}, r); }

ModuliPair degree_pair(double a, int p, double r) {
  return pair_of(ModulusPoint::from_r(r), degree_point(a, p, r));
}

double prod(const ModuliPair& m) { return m.alpha * m.beta; }
double prod_c(const ModuliPair& m) { return m.alpha_c * m.beta_c; }

double classical_deg3(double r) {
  const ModuliPair m = degree_pair(0.5, 3, r);
  return std::abs(std::pow(prod(m), 0.25) + std::pow(prod_c(m), 0.25) - 1.0);
}

double classical_deg5(double r) {
  const ModuliPair m = degree_pair(0.5, 5, r);
  const double p = prod(m) * prod_c(m);
  return std::abs(std::sqrt(prod(m)) + std::sqrt(prod_c(m)) + 2.0 * std::pow(16.0 * p, 1.0 / 6.0) - 1.0);
}

double classical_deg7(double r) {
  const ModuliPair m = degree_pair(0.5, 7, r);
  return std::abs(std::pow(prod(m), 0.125) + std::pow(prod_c(m), 0.125) - 1.0);
}

double classical_deg9_chain(double r) {
  const ModulusPoint p = ModulusPoint::from_r(r);
  const ModulusPoint b = degree_point(0.5, 3, r);
  const ModulusPoint g = degree_point(0.5, 9, r);
  const double alpha = p.r * p.r;
  const double alpha_c = p.r_prime * p.r_prime;
  const double beta = b.r * b.r;
  const double beta_c = b.r_prime * b.r_prime;
  const double gam = g.r * g.r;
  const double gam_c = g.r_prime * g.r_prime;
  const double lhs = std::pow(alpha * gam_c, 0.125) + std::pow(gam * alpha_c, 0.125);
  const double rhs = std::cbrt(2.0) * std::pow(beta * beta_c, 1.0 / 24.0);
  return std::abs(lhs - rhs);
}

double classical_deg23(double r) {
  const ModuliPair m = degree_pair(0.5, 23, r);
  const double p = prod(m) * prod_c(m);
  return std::abs(std::pow(prod(m), 0.125) + std::pow(prod_c(m), 0.125) +
                  std::pow(2.0, 2.0 / 3.0) * std::pow(p, 1.0 / 24.0) - 1.0);
}

double mixed_form(const ModuliPair& m) {
  const double lhs = std::sqrt(0.5 * (1.0 + std::sqrt(prod(m)) + std::sqrt(prod_c(m))));
  const double rhs = std::pow(prod(m), 0.125) + std::pow(prod_c(m), 0.125) -
                     std::pow(prod(m) * prod_c(m), 0.125);
  return std::abs(lhs - rhs);
}

// Both parameterizations: (r², φ_{1/7}(r)²) and (φ_{1/3}(r)², φ_{1/5}(r)²).
double classical_mixed(double r) {
  const double first = mixed_form(degree_pair(0.5, 7, r));
  const double second = mixed_form(pair_of(degree_point(0.5, 3, r), degree_point(0.5, 5, r)));
  return std::max(first, second);
}

constexpr double kSig3 = 1.0 / 3.0;

double sig3_deg2(double r) {
  const ModuliPair m = degree_pair(kSig3, 2, r);
  return std::abs(std::cbrt(prod(m)) + std::cbrt(prod_c(m)) - 1.0);
}

double sig3_deg5(double r) {
  const ModuliPair m = degree_pair(kSig3, 5, r);
  const double p = prod(m) * prod_c(m);
  return std::abs(std::cbrt(prod(m)) + std::cbrt(prod_c(m)) + 3.0 * std::pow(p, 1.0 / 6.0) - 1.0);
}

double sig3_deg11(double r) {
  const ModuliPair m = degree_pair(kSig3, 11, r);
  const double p = prod(m) * prod_c(m);
  const double tail = 3.0 * std::sqrt(3.0) * std::pow(p, 1.0 / 12.0) *
                      (std::pow(prod(m), 1.0 / 6.0) + std::pow(prod_c(m), 1.0 / 6.0));
  return std::abs(std::cbrt(prod(m)) + std::cbrt(prod_c(m)) + 6.0 * std::pow(p, 1.0 / 6.0) + tail - 1.0);
}

std::vector<ModularIdentity> build_registry() {
  std::vector<ModularIdentity> v;
  v.push_back({"classical_deg23", 0.5, {23},
               "(αβ)^{1/8}+((1−α)(1−β))^{1/8}+2^{2/3}(αβ(1−α)(1−β))^{1/24}=1", classical_deg23});
  v.push_back({"classical_deg3", 0.5, {3}, "(αβ)^{1/4}+((1−α)(1−β))^{1/4}=1", classical_deg3});
  v.push_back({"classical_deg5", 0.5, {5},
               "(αβ)^{1/2}+((1−α)(1−β))^{1/2}+2(16αβ(1−α)(1−β))^{1/6}=1", classical_deg5});
  v.push_back({"classical_deg7", 0.5, {7}, "(αβ)^{1/8}+((1−α)(1−β))^{1/8}=1", classical_deg7});
  v.push_back({"classical_deg9_chain", 0.5, {3, 9},
               "(α(1−γ))^{1/8}+(γ(1−α))^{1/8}=2^{1/3}(β(1−β))^{1/24}", classical_deg9_chain});
  v.push_back({"classical_mixed", 0.5, {3, 5, 7},
               "(α,β) = (r², φ_{1/7}(r)²) or (φ_{1/3}(r)², φ_{1/5}(r)²)", classical_mixed});
  v.push_back({"sig3_deg11", kSig3, {11}, "3√3{αβ(1−α)(1−β)}^{1/12}", sig3_deg11});
  v.push_back({"sig3_deg2", kSig3, {2}, "(αβ)^{1/3}+{(1−α)(1−β)}^{1/3}=1", sig3_deg2});
  v.push_back({"sig3_deg5", kSig3, {5}, "3{αβ(1−α)(1−β)}^{1/6}", sig3_deg5});
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return v;
}

}  // namespace

ModulusPoint solve_modular_point(const ModularSpec& spec, double r) {
  const SignatureParam sig(spec.signature_a);
  if (!(spec.degree_p >= 1.0) || !std::isfinite(spec.degree_p)) {
    throw Error(ErrorKind::domain, "modular degree must be a finite p >= 1");
  }
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "modular equation needs r in (0, 1)");
  const ModulusPoint p = ModulusPoint::from_r(r);
  if (spec.degree_p == 1.0) return p;
  const ModulusPoint s = phi_k_a_point(sig, 1.0 / spec.degree_p, p);
  const double want = spec.degree_p * mu_a(sig, p);
  const double got = mu_a(sig, s);
  if (std::abs(got - want) > kForwardTolerance * std::max(1.0, want)) {
    throw Error(ErrorKind::iteration_cap, "modular solution fails the forward μ_a check");
  }
  return s;
}

ModuliPair solve_modular(const ModularSpec& spec, double r) {
  return pair_of(ModulusPoint::from_r(r), solve_modular_point(spec, r));
}

const std::vector<ModularIdentity>& modular_identities() {
  static const std::vector<ModularIdentity> registry = build_registry();
  return registry;
}

const ModularIdentity& find_modular_identity(std::string_view id) {
  for (const auto& m : modular_identities()) {
    if (m.id == id) return m;
  }
  throw Error(ErrorKind::unknown_id, "unknown modular identity '" + std::string(id) + "'");
}

double identity_residual(std::string_view id, double r) {
  const ModularIdentity& m = find_modular_identity(id);
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "identity residual needs r in (0, 1)");
  return m.residual(r);
}

}  // namespace specfun
