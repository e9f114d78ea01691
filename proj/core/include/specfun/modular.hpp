#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "specfun/elliptic.hpp"

namespace specfun {

struct ModularSpec {
  double signature_a = 0.5;
  double degree_p = 1.0;
};

// α = r², β = s² together with the complements 1 - α = r'², 1 - β = s'²,
// each formed from the corresponding coordinate rather than by subtraction.
struct ModuliPair {
  double alpha = 0.0;
  double beta = 0.0;
  double alpha_c = 1.0;
  double beta_c = 1.0;
};

// Solves μ_a(s) = p μ_a(r) and checks the forward relation to 1e-10 (relative).
ModuliPair solve_modular(const ModularSpec& spec, double r);
// Point form of the solution s for callers that need s and s' directly.
ModulusPoint solve_modular_point(const ModularSpec& spec, double r);

struct ModularIdentity {
  std::string id;
  double signature_a = 0.5;
  std::vector<int> degrees;
  std::string anchor;
  std::function<double(double)> residual;  // r -> |LHS - RHS|
};

const std::vector<ModularIdentity>& modular_identities();
const ModularIdentity& find_modular_identity(std::string_view id);

double identity_residual(std::string_view id, double r);

}  // namespace specfun
