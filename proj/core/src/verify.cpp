#include "specfun/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "specfun/balls.hpp"
#include "specfun/elliptic.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hyper.hpp"
#include "specfun/modular.hpp"

namespace specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = constants::pi;
constexpr double kGamma = constants::euler_gamma;
constexpr double kSharpPerturbation = 1e-3;
constexpr double kInequalitySlack = 1e-12;

// Positive when lo < hi, scaled by the larger magnitude.
double rel_gap(double lo, double hi) {
  const double scale = std::max({std::abs(lo), std::abs(hi), std::numeric_limits<double>::min()});
  return (hi - lo) / scale;
}

std::vector<double> int_range(int lo, int hi) {
  std::vector<double> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

// Deterministic parameter draws: the raw 64-bit engine output is mapped to
// [0,1) by hand so the sequence does not depend on the standard library's
// distribution implementation.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

std::string iso_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string suite_of(const std::string& id) { return id.substr(0, id.find('.')); }

template <typename F>
double max_over(std::initializer_list<double> params, F&& f) {
  double worst = 0.0;
  for (double p : params) worst = std::max(worst, std::abs(f(p)));
  return worst;
}

// ---------------------------------------------------------------------------
// Registry builders
// ---------------------------------------------------------------------------

struct Builder {
  std::vector<CheckSpec> checks;

  void identity(std::string id, std::string anchor, double tol, CheckDomain domain,
                std::function<double(double)> f) {
    checks.push_back({std::move(id), std::move(anchor), CheckKind::identity, tol, std::move(f),
                      std::move(domain), Direction::none, false, {}});
  }
  void inequality(std::string id, std::string anchor, CheckDomain domain, std::function<double(double)> margin,
                  CheckKind kind = CheckKind::inequality) {
    checks.push_back({std::move(id), std::move(anchor), kind, kInequalitySlack, std::move(margin),
                      std::move(domain), Direction::none, false, {}});
  }
  void monotone(std::string id, std::string anchor, Direction dir, CheckDomain domain,
                std::function<double(double)> f) {
    checks.push_back({std::move(id), std::move(anchor), CheckKind::monotonicity, kMonotoneSlack, std::move(f),
                      std::move(domain), dir, false, {}});
  }
  void convex(std::string id, std::string anchor, Direction dir, CheckDomain domain,
              std::function<double(double)> f) {
    checks.push_back({std::move(id), std::move(anchor), CheckKind::convexity, kConvexSlack, std::move(f),
                      std::move(domain), dir, false, {}});
  }
  // Perturbs a sharp constant in the favorable direction; a violation means
  // the printed constant cannot be improved by that much.
  void sharpness(std::string id, std::string anchor, std::string what, CheckDomain domain,
                 std::function<double(double)> margin) {
    CheckSpec c{std::move(id), std::move(anchor), CheckKind::inequality, kInequalitySlack, std::move(margin),
                std::move(domain), Direction::none, true, {}};
    c.note = "sharpness probe (" + what + " moved by 1e-3 toward a stronger claim)";
    checks.push_back(std::move(c));
  }
  void observation(CheckSpec c, std::string what) {
    c.advisory = true;
    c.note = "observation (" + what + "), not a proved bound";
    checks.push_back(std::move(c));
  }
};

void add_gamma(Builder& b) {
  b.identity("gamma.theta_table", "θ(x) vs four-digit table, θ(0) = 30/π³, θ(∞) = 1", 5e-5,
             [] {
               std::vector<double> xs;
               for (const auto& rec : theta_record) xs.push_back(rec.x);
               return xs;
             }(),
             [](double x) {
               for (const auto& rec : theta_record) {
                 if (rec.x == x) return theta(x) - rec.printed;
               }
               throw Error(ErrorKind::domain, "abscissa is not in the θ record");
             });

  const Grid conj(1.0, 500.0, 500);
  b.inequality("gamma.theta_h_range", "1/100 < H(x) < 1/30 on (1,∞)", conj,
               [](double x) {
                 const double h = theta(x) / 30.0;
                 return std::min(rel_gap(0.01, h), rel_gap(h, 1.0 / 30.0));
               },
               CheckKind::bracket);
  b.monotone("gamma.theta_h_increasing", "H′(x) > 0 on (1,∞)",
             Direction::increasing, conj, [](double x) { return theta(x); });

  auto table = std::make_shared<const std::vector<DeTempleTerms>>(detemple_range(10000));
  auto term = [table](double n) -> const DeTempleTerms& { return (*table)[static_cast<std::size_t>(n) - 1]; };
  b.inequality("gamma.detemple_bracket", "1/(24(n+1)²) < R_n − γ < 1/(24n²)", int_range(1, 10000),
               [term](double n) {
                 const double v = term(n).r_minus_gamma;
                 return std::min(rel_gap(1.0 / (24.0 * (n + 1) * (n + 1)), v), rel_gap(v, 1.0 / (24.0 * n * n)));
               },
               CheckKind::bracket);
  b.monotone("gamma.detemple_h_increasing", "H(n) < H(n+1), n ≥ 1", Direction::increasing,
             int_range(1, 10000), [term](double n) { return term(n).big_h; });
  b.inequality("gamma.detemple_h_bound", "H(n) < 1/24", int_range(1, 10000),
               [term](double n) { return rel_gap(term(n).big_h, 1.0 / 24.0); });
  b.identity("gamma.detemple_h1", "H(1) = 1 − γ − log(3/2)", 1e-15, std::vector<double>{1.0},
             [](double) {
               const double h = detemple(1).big_h;
               // the printed digits 0.0173 must be a truncation of the value
               if (std::floor(h * 1e4) != 173.0) return 1.0;
               return h - (1.0 - kGamma - std::log(1.5));
             });
  b.inequality("gamma.harmonic_slower", "|D_n − γ| > |R_n − γ|", int_range(2, 1000), [term](double n) {
    const double r = term(n).r_minus_gamma;
    const double d = r + std::log1p(0.5 / n);
    return rel_gap(std::abs(r), std::abs(d));
  });
  b.inequality("gamma.karatsuba_bound", "c_k = 2/(12k)! + 2k²e^{−k}", std::vector<double>{1, 5, 10, 20},
               [](double k) {
                 const int ki = static_cast<int>(k);
                 return rel_gap(std::abs(karatsuba_euler_gamma(ki).value - kGamma), karatsuba_bound(ki));
               });

  auto ramanujan_error = [](double terms) {
    const double exact = 3628800.0;  // 10!
    return std::abs(ramanujan_gamma(10.0, static_cast<int>(terms)).value - exact) / exact;
  };
  b.monotone("gamma.ramanujan_expansion_decreasing", "Δ_{n+1}(x)=O(1/x^{n+1})", Direction::decreasing,
             int_range(0, 7), ramanujan_error);
  b.inequality("gamma.ramanujan_expansion_x10", "8x^3+4x^2+x+ 1/30 − 11/240x", std::vector<double>{7.0},
               [ramanujan_error](double t) { return rel_gap(ramanujan_error(t), 1e-9); });

  b.inequality("gamma.power_bounds", "x^{(1-γ)x-1} < Γ(x) < x^{x-1}", Grid(1.495, 100.0, 200), [](double x) {
    const double lg = log_gamma(x);
    const double lx = std::log(x);
    return std::min(rel_gap(((1.0 - kGamma) * x - 1.0) * lx, lg), rel_gap(lg, (x - 1.0) * lx));
  });
  const double alzer_mid = (kPi * kPi / 6.0 - kGamma) / 2.0;
  auto alzer = [](double lo_c, double hi_c) {
    return [lo_c, hi_c](double x) {
      const double lg = log_gamma(x);
      const double lx = std::log(x);
      // x^e as exp(e log x); the log-domain bounds flip with the sign of log x
      const double lower = (lo_c * (x - 1.0) - kGamma) * lx;
      const double upper = (hi_c * (x - 1.0) - kGamma) * lx;
      return std::min(rel_gap(lower, lg), rel_gap(lg, upper));
    };
  };
  b.inequality("gamma.alzer_below_one", "α ≡ 1 − γ = 0.42278", Grid(0.0, 1.0, 512, Spacing::atanh_stretched),
               alzer(1.0 - kGamma, alzer_mid));
  b.inequality("gamma.alzer_above_one", "α ≡ 1 − γ = 0.42278", Grid(1.0, 1000.0, 512, Spacing::atanh_stretched),
               alzer(alzer_mid, 1.0));

  {
    Draws d(0x5eed0001);
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) xs.push_back(d.uniform(0.5, 50.0));
    std::sort(xs.begin(), xs.end());
    b.identity("gamma.recurrence", "Γ(z+1)=zΓ(z)", 1e-12, xs, [](double x) {
      const double g1 = gamma(x + 1.0);
      return (g1 - x * gamma(x)) / g1;
    });
  }

  const Grid mono(1.0, 200.0, 400);
  b.monotone("gamma.mono_f_increasing", "f(1,∞) = (1−γ, 1), f′ > 0", Direction::increasing, mono, mono_f);
  b.convex("gamma.mono_f_concave", "f″ < 0 for x>1", Direction::concave, mono, mono_f);
  b.inequality("gamma.mono_f_range", "f(1,∞) = (1−γ, 1), f′ > 0",
               Grid(1.01, 1e4, 200, Spacing::logarithmic),
               [](double x) {
                 const double f = mono_f(x);
                 return std::min(rel_gap(1.0 - kGamma, f), rel_gap(f, 1.0));
               },
               CheckKind::bracket);
  b.inequality("gamma.lemma_g_positive", "g(x) > 0, x > −1", Grid(-0.99, 100.0, 200),
               [](double x) { return lemma_g(x); });
  b.inequality("gamma.lemma_h_nonnegative", "h(x) ≥ 0, h′ < 0 on (−1,0]", Grid(-0.99, 10.0, 200),
               [](double x) { return lemma_h(x); });
  b.identity("gamma.lemma_h_zero", "x²Ψ′(1+x) − xΨ(1+x) + log Γ(1+x)", 1e-15, std::vector<double>{0.0},
             [](double x) { return lemma_h(x); });

  auto ratio = [term](double n) { return (n + 1) * (n + 1) / (n * n) * term(n).big_h; };
  b.observation({"gamma.bigh_ratio_decreasing", "((n+1)/n)²H(n), n ≥ 1",
                 CheckKind::monotonicity, kMonotoneSlack, ratio, int_range(1, 1000), Direction::decreasing, false, {}},
                "computer experiment");
  b.observation({"gamma.bigh_ratio_convex", "((n+1)/n)²H(n), n ≥ 1",
                 CheckKind::convexity, kConvexSlack, ratio, int_range(1, 1000), Direction::convex, false, {}},
                "computer experiment");
}

void add_balls(Builder& b) {
  b.monotone("balls.volume_decreasing", "Ω_n, ω_n → 0 monotonically for n ≥ 7", Direction::decreasing,
             int_range(7, 200), [](double n) { return ball_volume(static_cast<int>(n)); });
  b.monotone("balls.area_decreasing", "Ω_n, ω_n → 0 monotonically for n ≥ 7", Direction::decreasing,
             int_range(7, 200), [](double n) { return sphere_area(static_cast<int>(n)); });
  b.monotone("balls.volume_root_decreasing", "Ω_n^{1/(n log n)} ↓ e^{−1/2}", Direction::decreasing,
             int_range(2, 200), [](double n) { return volume_root(static_cast<int>(n)); });
  b.inequality("balls.volume_root_limit", "Ω_n^{1/(n log n)} ↓ e^{−1/2}", int_range(2, 200),
               [](double n) { return rel_gap(std::exp(-0.5), volume_root(static_cast<int>(n))); });

  namespace bc = ball_constants;
  struct Family {
    const char* id;
    const char* anchor;
    int first;
    double (*quantity)(int);
    double (*lower)(double n, double c);
    double (*upper)(double n, double c);
    double lo_c;
    double hi_c;
    const char* lo_name;
    const char* hi_name;
  };
  const std::array<Family, 4> families{{
      {"power_mean", "a = 2/√π = 1.12837", 1, power_mean_ratio, [](double, double c) { return c; },
       [](double, double c) { return c; }, bc::power_lower, bc::power_upper, "a", "b"},
      {"adjacent_ratio", "√((n+A)/(2π)) ≤ Ω_{n−1}/Ω_n ≤ √((n+B)/(2π))", 1, adjacent_ratio,
       [](double n, double c) { return std::sqrt((n + c) / (2.0 * kPi)); },
       [](double n, double c) { return std::sqrt((n + c) / (2.0 * kPi)); }, bc::ratio_lower, bc::ratio_upper, "A",
       "B"},
      {"log_convexity", "(1+1/n)^α ≤ Ω_n²/(Ω_{n−1}Ω_{n+1}) ≤ (1+1/n)^β", 1, log_convexity_ratio,
       [](double n, double c) { return std::pow(1.0 + 1.0 / n, c); },
       [](double n, double c) { return std::pow(1.0 + 1.0 / n, c); }, bc::log_convex_lower, bc::log_convex_upper,
       "α", "β"},
      {"difference", "A=(4−π)√2=1.2139", 2, difference_quantity, [](double n, double c) { return c / std::sqrt(n); },
       [](double n, double c) { return c / std::sqrt(n); }, bc::difference_lower, bc::difference_upper, "A", "B"},
  }};
  for (const Family& f : families) {
    const auto q = f.quantity;
    const auto lo = f.lower;
    const auto hi = f.upper;
    const double lc = f.lo_c;
    const double hc = f.hi_c;
    const std::string id(f.id);
    b.inequality("balls." + id, f.anchor, int_range(f.first, 200), [=](double n) {
      const double v = q(static_cast<int>(n));
      return std::min(rel_gap(lo(n, lc), v), rel_gap(v, hi(n, hc)));
    });
    b.sharpness("balls.sharp_" + id + "_lower", f.anchor, std::string("lower constant ") + f.lo_name,
                int_range(f.first, 200), [=](double n) {
                  return rel_gap(lo(n, lc * (1.0 + kSharpPerturbation)), q(static_cast<int>(n)));
                });
    b.sharpness("balls.sharp_" + id + "_upper", f.anchor, std::string("upper constant ") + f.hi_name,
                int_range(f.first, 200), [=](double n) {
                  return rel_gap(q(static_cast<int>(n)), hi(n, hc * (1.0 - kSharpPerturbation)));
                });
  }
}

struct Triple {
  double a, b, c;
};

void add_hyper(Builder& b) {
  b.identity("hyper.closed_forms", "z F(1,1;2;z) = −log(1−z)", 1e-13, Grid(0.01, 0.99, 99), [](double z) {
    const double e1 = z * f21({1.0, 1.0, 2.0}, z).value + std::log1p(-z);
    const double t = std::atanh(z);
    const double e2 = (z * f21({1.0, 0.5, 1.5}, z * z).value - t) / std::max(1.0, t);
    return std::max(std::abs(e1) / std::max(1.0, -std::log1p(-z)), std::abs(e2));
  });

  const std::vector<Triple> params{{0.5, 0.5, 1.0}, {1.3, 0.7, 1.5}, {0.3, 0.7, 1.2}, {2.2, 1.4, 3.1}};
  const Grid interior(0.02, 0.98, 49);
  b.identity("hyper.derivative_formula", "(ab/c) F(a+1,b+1;c+1;z)", 1e-6, interior, [params](double z) {
    double worst = 0.0;
    for (const auto& p : params) {
      auto f = [&](double t) { return f21_relaxed({p.a, p.b, p.c}, t).value; };
      const double d = derivative(f, z, 1, default_derivative_step(1, z), Interval{0.0, 1.0});
      const double exact = p.a * p.b / p.c * f21_relaxed({p.a + 1, p.b + 1, p.c + 1}, z).value;
      worst = std::max(worst, std::abs(d - exact) / std::max(1.0, std::abs(exact)));
    }
    return worst;
  });

  const std::array<std::pair<double, double>, 3> zb{{{0.5, 0.5}, {1.0 / 3, 2.0 / 3}, {0.25, 0.25}}};
  b.inequality("hyper.zero_balanced_limit", "= R(a,b) + O((1−z)log(1−z))", std::vector<double>{0, 1, 2},
               [zb](double i) {
                 const auto [a, bb] = zb[static_cast<std::size_t>(i)];
                 const double y = 1e-6;
                 const double bound = 10.0 * y * std::abs(std::log(y));
                 return rel_gap(std::abs(zero_balanced_gap(a, bb, y)), bound);
               });
  b.identity("hyper.ramanujan_r_half", "R(1/2) = log 16", 1e-12, std::vector<double>{0.5},
             [](double a) { return ramanujan_R(a) - std::log(16.0); });
  b.monotone("hyper.r_sin_decreasing", "R(x)sin(πx) on (0,1/2], range (π, log 16]",
             Direction::decreasing, Grid(0.0025, 0.5, 200), ramanujan_R_sin);
  b.identity("hyper.r_sin_limits", "R(x)sin(πx) on (0,1/2], range (π, log 16]", 1e-6,
             std::vector<double>{1e-8, 0.5},
             [](double x) { return ramanujan_R_sin(x) - (x < 0.25 ? kPi : std::log(16.0)); });

  const double ka = 0.5;
  const double kb = 0.5;
  const Grid kgrid(0.05, 20.0, 400);
  b.monotone("hyper.k_increasing", "k′ > 0, k″ > 0 on (0,∞)", Direction::increasing, kgrid,
             [=](double x) { return k_function(ka, kb, x); });
  b.convex("hyper.k_convex", "k′ > 0, k″ > 0 on (0,∞)", Direction::convex, kgrid,
           [=](double x) { return k_function(ka, kb, x); });
  b.identity("hyper.k_derivative_limits", "k′((0, ∞)) = (ab/(a+b), Γ(a+b)/(Γ(a)Γ(b)))", 1e-3,
             std::vector<double>{1e-6, 20.0}, [=](double x) {
               const double lim = x < 1.0 ? ka * kb / (ka + kb) : 1.0 / beta(ka, kb);
               return (k_derivative(ka, kb, x) - lim) / lim;
             });
  const HyperParams lp{0.8, 0.7, 1.0};
  const double ld = lp.a + lp.b - lp.c;
  b.monotone("hyper.l_increasing", "ℓ′((0,∞)) = (ab/(cd)", Direction::increasing, kgrid,
             [=](double x) { return l_function(lp, x); });
  b.convex("hyper.l_convex", "ℓ′((0,∞)) = (ab/(cd)", Direction::convex, kgrid,
           [=](double x) { return l_function(lp, x); });
  b.identity("hyper.l_derivative_limits", "ℓ′((0,∞)) = (ab/(cd), Γ(c)Γ(d)/(Γ(a)Γ(b)))", 1e-3,
             std::vector<double>{1e-6, 1e4}, [=](double x) {
               const double lim = x < 1.0 ? lp.a * lp.b / (lp.c * ld)
                                          : gamma(lp.c) * gamma(ld) / (gamma(lp.a) * gamma(lp.b));
               return (l_derivative(lp, x) - lim) / lim;
             });

  const std::array<std::pair<ContiguousRelation, double>, 5> relations{{
      {ContiguousRelation::d_u, 1e-6},
      {ContiguousRelation::d_v, 1e-6},
      {ContiguousRelation::shift_c, 1e-8},
      {ContiguousRelation::sym_combo, 1e-6},
      {ContiguousRelation::b_shift, 1e-6},
  }};
  for (const auto& [rel, tol] : relations) {
    b.identity(std::string("hyper.contiguous_") + to_string(rel), "contiguous relation among F(a±1,b±1;c±1;z)", tol, interior,
               [params, rel = rel](double z) {
                 double worst = 0.0;
                 for (const auto& p : params) {
                   worst = std::max(worst, std::abs(contiguous_residual(rel, {p.a, p.b, p.c}, z)));
                 }
                 return worst;
               });
  }

  const std::array<std::pair<double, double>, 4> cor{{{0.3, 1.2}, {0.5, 1.0}, {0.7, 0.8}, {0.2, 2.5}}};
  const Grid cgrid(0.05, 0.95, 91);
  b.identity("hyper.product_constant", "uv₁ + u₁v − vv₁ = u(1) = (Γ(c))²/(Γ(c+a−1)Γ(c−a+1))", 1e-9, cgrid,
             [cor](double z) {
               double worst = 0.0;
               for (const auto& [a, c] : cor) {
                 worst = std::max(worst, std::abs(corollary44_value(a, c, z) - corollary44_constant(a, c)));
               }
               return worst;
             });
  b.identity("hyper.product_constant_spread", "max_z − min_z of uv₁ + u₁v − vv₁", 2e-9, cgrid, [cor](double z) {
    double worst = 0.0;
    for (const auto& [a, c] : cor) {
      worst = std::max(worst, std::abs(corollary44_value(a, c, z) - corollary44_value(a, c, 0.5)));
    }
    return worst;
  });

  const std::vector<Triple> wr{{0.5, 0.5, 1.0}, {0.4, 0.8, 1.1}, {1.2, 0.8, 1.5}};
  b.identity("hyper.wronskian_combo", "(c−a)(uv₁ + u₁v) + (a−1)vv₁ = A·z^{1−c}(1−z)^{1−c}", 1e-9, cgrid,
             [wr](double z) {
               double worst = 0.0;
               for (const auto& p : wr) worst = std::max(worst, std::abs(wronskian_combo_residual({p.a, p.b, p.c}, z)));
               return worst;
             });
  b.identity("hyper.wronskian_decay", "A / (z^c(1−z)^{a+b−c+1})", 1e-6, cgrid, [wr](double z) {
    double worst = 0.0;
    for (const auto& p : wr) {
      const double ref = wronskian_scaled({p.a, p.b, p.c}, 0.5);
      worst = std::max(worst, std::abs(wronskian_scaled({p.a, p.b, p.c}, z) / ref - 1.0));
    }
    return worst;
  });

  {
    Draws d(0x5eed0002);
    auto pts = std::make_shared<std::vector<std::array<double, 4>>>();
    for (int i = 0; i < 100; ++i) {
      pts->push_back({d.uniform(0.0, 1.0), d.uniform(0.0, 1.0), d.uniform(0.0, 1.0), d.uniform(0.02, 0.98)});
    }
    b.identity("hyper.elliott", "F₁F₂ + F₃F₄ − F₂F₃ = Γ(a+b+1)Γ(b+c+1)/(Γ(a+b+c+3/2)Γ(b+1/2))", 1e-9,
               int_range(0, 99), [pts](double i) {
                 const auto& p = (*pts)[static_cast<std::size_t>(i)];
                 return elliott_residual(p[0], p[1], p[2], p[3]);
               });
  }
  {
    Draws d(0x5eed0003);
    auto pts = std::make_shared<std::vector<std::array<double, 4>>>();
    for (int i = 0; i < 50; ++i) {
      pts->push_back({d.uniform(0.1, 1.5), d.uniform(0.1, 1.5), d.uniform(0.1, 1.5), d.uniform(0.05, 0.95)});
    }
    b.identity("hyper.kummer", "D = Γ(a+b−c+1)Γ(c+1)/(Γ(a+1)Γ(b+1))", 1e-8, int_range(0, 49), [pts](double i) {
      const auto& p = (*pts)[static_cast<std::size_t>(i)];
      return kummer_residual(p[0], p[1], p[2], p[3]);
    });
  }
  {
    Draws d(0x5eed0004);
    struct Draw {
      int n;
      double a, b, eps;
    };
    auto pts = std::make_shared<std::vector<Draw>>();
    for (int i = 0; i < 100; ++i) {
      const int n = d.integer(1, 50);
      const double a = d.uniform(0.01, 2.0);
      const double bb = d.uniform(0.01, 2.0);
      const double lo = a * bb / (1.0 + a + bb);
      pts->push_back({n, a, bb, d.uniform(lo + 1e-9, 1.0 - 1e-9)});
    }
    b.inequality("hyper.f32_positive", "₃F₂(−n,a,b; 1+a+b, 1+ε−n; 1) > 0, n ≥ 1", int_range(0, 99),
                 [pts](double i) {
                   const Draw& p = (*pts)[static_cast<std::size_t>(i)];
                   return f32_terminating(p.n, p.a, p.b, p.eps);
                 });
  }

  const Grid ode_grid(0.05, 0.95, 91);
  b.identity("hyper.ode", "z(1−z)w″+[c−(a+b+1)z]w′−abw=0", 1e-5, ode_grid, [params](double z) {
    double worst = 0.0;
    for (const auto& p : params) worst = std::max(worst, std::abs(hypergeometric_ode_residual({p.a, p.b, p.c}, z)));
    return worst;
  });
  const std::vector<Triple> lem{{0.5, 0.5, 1.0}, {1.0 / 3, 2.0 / 3, 1.0}, {0.3, 0.4, 1.2}};
  b.identity("hyper.lemniscate_ode", "Z³(1−Z)zw″ − {…} w′ − abz³w = 0", 1e-5, ode_grid, [lem](double z) {
    double worst = 0.0;
    for (const auto& p : lem) worst = std::max(worst, std::abs(lemniscate_ode_residual({p.a, p.b, p.c}, z)));
    return worst;
  });
}

void add_elliptic(Builder& b) {
  const Grid unit512(0.0, 1.0, 512, Spacing::atanh_stretched);
  b.identity("elliptic.agm_series", "K(r) = (π/2)F(1/2,1/2;1;r²)", 1e-12, unit512, [](double r) {
    const ModulusPoint p = ModulusPoint::from_r(r);
    const double y = p.r_prime * p.r_prime;
    const double f = f21_complement_log({0.5, 0.5, 1.0}, y, 2.0 * std::log(p.r_prime)).value;
    return 2.0 / kPi * ellip_k(p) - f;
  });
  b.identity("elliptic.legendre", "E K′ + E′K − KK′ = π/2", 1e-12, Grid(0.01, 0.99, 99), legendre_residual);
  b.identity("elliptic.generalized_legendre", "E_aK_a′ + E_a′K_a − K_aK_a′ = π sin(πa)/(4(1−a))", 1e-10,
             Grid(0.0, 1.0, 64, Spacing::atanh_stretched), [](double r) {
               return max_over({1.0 / 6, 0.25, 1.0 / 3, 0.49},
                               [r](double a) { return generalized_legendre_residual(SignatureParam(a), r); });
             });
  b.identity("elliptic.k_a_reduction", "K_a(r) = (π/2) F(a,1−a;1;r²)", 1e-12, unit512, [](double r) {
    const double k = ellip_k(r);
    return (k_a(kClassicalSignature, r) - k) / k;
  });

  const Grid guard(0.06, 0.94, 89);
  b.identity("elliptic.ka_ode", "(1−3r²) dK_a/dr − 4a(1−a)rK_a", 1e-5, guard, [](double r) {
    return max_over({1.0 / 6, 0.25, 1.0 / 3, 0.5},
                    [r](double a) { return ode_residual(EllipticOde::ka_ode, SignatureParam(a), r); });
  });
  b.identity("elliptic.ea_ode", "(r′)² dE_a/dr + 4(1−a)²rE_a", 1e-5, guard, [](double r) {
    return max_over({1.0 / 6, 0.25, 1.0 / 3, 0.5},
                    [r](double a) { return ode_residual(EllipticOde::ea_ode, SignatureParam(a), r); });
  });
  b.identity("elliptic.schwarzian", "S_w(r) = −8a(1−a)/(r′)² + (1+6r²−3r⁴)/(2r²(r′)⁴)", 1e-3,
             Grid(0.11, 0.89, 79), [](double r) {
               return max_over({0.25, 1.0 / 3, 0.5},
                               [r](double a) { return schwarzian_residual(SignatureParam(a), r); });
             });
  // Ratio of residuals at steps 4e-2 and 2e-2: an O(h²) stencil gives 4.
  b.identity("elliptic.schwarzian_decay", "S_w(r) = −8a(1−a)/(r′)²", 0.25,
             std::vector<double>{0.2, 0.35, 0.5, 0.65, 0.8}, [](double r) {
               const SignatureParam s(0.25);
               const double coarse = schwarzian_residual(s, r, 4e-2);
               const double fine = schwarzian_residual(s, r, 2e-2);
               return coarse / fine / 4.0 - 1.0;
             });

  auto arth_ratio = [](double r) { return r == 0.0 ? 1.0 : std::atanh(r) / r; };
  b.inequality("elliptic.arth_bounds", "(π/2)(arth r / r)^{1/2} < K(r)", unit512, [=](double r) {
    const double k = ellip_k(r);
    const double q = arth_ratio(r);
    return std::min(rel_gap(kPi / 2.0 * std::sqrt(q), k), rel_gap(k, kPi / 2.0 * q));
  });
  b.inequality("elliptic.alzer_qiu_exponent", "(arth r/r)^{3/4} < K(r)", unit512, [=](double r) {
    return rel_gap(kPi / 2.0 * std::pow(arth_ratio(r), 0.75), ellip_k(r));
  });
  // K(r) / log(4/r′), with log(4/r′) formed from r′ directly
  auto k_over_log = [](double r) {
    const ModulusPoint p = ModulusPoint::from_r(r);
    return ellip_k(p) / std::log(4.0 / p.r_prime);
  };
  b.inequality("elliptic.kuhnau_qiu", "9/(8+r²) < K(r)/log(4/r′)", unit512,
               [=](double r) { return rel_gap(9.0 / (8.0 + r * r), k_over_log(r)); });
  b.inequality("elliptic.qiu_vamanamurthy", "< 1 + (1/4)(r′)²", unit512, [=](double r) {
    const double rp2 = (1.0 - r) * (1.0 + r);
    return rel_gap(k_over_log(r), 1.0 + 0.25 * rp2);
  });
  const double alzer_c = kPi / (4.0 * constants::log2) - 1.0;
  b.inequality("elliptic.alzer_log", "1 + (π/(4 log 2) − 1)(r′)²", unit512, [=](double r) {
    const double rp2 = (1.0 - r) * (1.0 + r);
    return rel_gap(1.0 + alzer_c * rp2, k_over_log(r));
  });
  const Grid closed_unit(0.0, 1.0, 512);
  b.inequality("elliptic.muir_lower", "≥ ((1+(r′)^{3/2})/2)^{2/3}", closed_unit, [](double r) {
    const ModulusPoint p = ModulusPoint::from_r(r);
    return rel_gap(std::pow(0.5 * (1.0 + std::pow(p.r_prime, 1.5)), 2.0 / 3.0), 2.0 / kPi * ellip_e(p));
  });
  b.inequality("elliptic.upper_mean", "≤ ((1+(r′)²)/2)^{1/2}", closed_unit, [](double r) {
    const ModulusPoint p = ModulusPoint::from_r(r);
    return rel_gap(2.0 / kPi * ellip_e(p), std::sqrt(0.5 * (1.0 + p.r_prime * p.r_prime)));
  });

  const Grid refined(0.0, 1.0, 8192, Spacing::atanh_stretched);
  b.sharpness("elliptic.sharp_alzer_qiu_exponent", "(arth r/r)^{3/4} < K(r)", "exponent 3/4", refined, [=](double r) {
    return rel_gap(kPi / 2.0 * std::pow(arth_ratio(r), 0.75 + kSharpPerturbation), ellip_k(r));
  });
  b.sharpness("elliptic.sharp_arth_upper", "(π/2)(arth r / r)", "upper exponent 1", refined, [=](double r) {
    return rel_gap(ellip_k(r), kPi / 2.0 * std::pow(arth_ratio(r), 1.0 - kSharpPerturbation));
  });
  b.sharpness("elliptic.sharp_qiu_vamanamurthy", "< 1 + (1/4)(r′)²", "constant 1/4", refined, [=](double r) {
    const double rp2 = (1.0 - r) * (1.0 + r);
    return rel_gap(k_over_log(r), 1.0 + 0.25 * (1.0 - kSharpPerturbation) * rp2);
  });
  b.sharpness("elliptic.sharp_alzer_log", "1 + (π/(4 log 2) − 1)(r′)²", "constant π/(4 log 2) − 1", refined,
              [=](double r) {
                const double rp2 = (1.0 - r) * (1.0 + r);
                return rel_gap(1.0 + alzer_c * (1.0 + kSharpPerturbation) * rp2, k_over_log(r));
              });

  const std::array<std::pair<const char*, double>, 4> sigs{
      {{"sixth", 1.0 / 6}, {"quarter", 0.25}, {"third", 1.0 / 3}, {"half", 0.5}}};
  for (const auto& [name, a] : sigs) {
    b.monotone(std::string("elliptic.mu_decreasing_") + name, "μ_a(r₁) > μ_a(r₂) for r₁ < r₂, μ_a: (0,1)→(0,∞)",
               Direction::decreasing, unit512, [a = a](double r) { return mu_a(SignatureParam(a), r); });
  }
  const Grid modular_grid(0.05, 0.95, 64, Spacing::atanh_stretched);
  b.inequality("elliptic.phi_below_identity", "μ_a(s) = pμ_a(r)", modular_grid, [](double r) {
    double worst = kInf;
    for (double a : {0.25, 1.0 / 3, 0.5}) {
      for (double p : {2.0, 3.0, 5.0, 7.0}) {
        worst = std::min(worst, rel_gap(phi_k_a(SignatureParam(a), 1.0 / p, r), r));
      }
    }
    return worst;
  });
  b.monotone("elliptic.phi_increasing", "s = φ_K^a(r) ≡ μ_a^{-1}(μ_a(r)/K)", Direction::increasing,
             Grid(0.01, 0.99, 200), [](double r) { return phi_k_a(SignatureParam(1.0 / 3), 1.0 / 3.0, r); });
  b.identity("elliptic.phi_roundtrip", "s = φ_K^a(r) ≡ μ_a^{-1}(μ_a(r)/K)", 1e-9, modular_grid, [](double r) {
    double worst = 0.0;
    const ModulusPoint p = ModulusPoint::from_r(r);
    for (double a : {0.25, 1.0 / 3, 0.5}) {
      const SignatureParam s(a);
      for (double deg : {2.0, 3.0, 5.0, 7.0, 11.0, 23.0}) {
        const ModulusPoint there = phi_k_a_point(s, 1.0 / deg, p);
        const ModulusPoint back = phi_k_a_point(s, deg, there);
        worst = std::max(worst, std::abs(back.r - r));
      }
    }
    return worst;
  });
}

void add_modular(Builder& b) {
  const Grid grid(0.05, 0.95, 64, Spacing::atanh_stretched);
  for (const ModularIdentity& m : modular_identities()) {
    const std::string id = m.id;
    b.identity("modular." + id, m.anchor, 1e-6, grid, [id](double r) { return identity_residual(id, r); });
  }
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

std::vector<double> points_of(const CheckDomain& domain, const std::optional<int>& grid_n) {
  if (const Grid* g = std::get_if<Grid>(&domain)) {
    return grid_n ? g->resized(*grid_n).points() : g->points();
  }
  return std::get<std::vector<double>>(domain);
}

double sanitize(double r) { return std::isnan(r) ? kInf : r; }

// Finite-difference residuals of the sampled values; index i refers to the
// pair or triple ending at xs[i].
std::vector<double> difference_residuals(const CheckSpec& spec, const std::vector<double>& xs,
                                         const std::vector<double>& fx) {
  std::vector<double> res(xs.size(), 0.0);
  if (spec.kind == CheckKind::monotonicity) {
    const double sign = spec.direction == Direction::decreasing ? -1.0 : 1.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const double scale = std::max({std::abs(fx[i]), std::abs(fx[i - 1]), std::numeric_limits<double>::min()});
      res[i] = sign * (fx[i - 1] - fx[i]) / scale;
    }
    return res;
  }
  const double sign = spec.direction == Direction::concave ? -1.0 : 1.0;
  for (std::size_t i = 2; i < xs.size(); ++i) {
    const double s0 = (fx[i - 1] - fx[i - 2]) / (xs[i - 1] - xs[i - 2]);
    const double s1 = (fx[i] - fx[i - 1]) / (xs[i] - xs[i - 1]);
    const double scale = std::max({std::abs(s0), std::abs(s1), std::numeric_limits<double>::min()});
    res[i] = sign * (s0 - s1) / scale;
  }
  return res;
}

}  // namespace

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::identity: return "identity";
    case CheckKind::inequality: return "inequality";
    case CheckKind::monotonicity: return "monotonicity";
    case CheckKind::convexity: return "convexity";
    case CheckKind::bracket: return "bracket";
  }
  return "unknown";
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::gamma: return "gamma";
    case Suite::balls: return "balls";
    case Suite::hyper: return "hyper";
    case Suite::elliptic: return "elliptic";
    case Suite::modular: return "modular";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::all, Suite::gamma, Suite::balls, Suite::hyper, Suite::elliptic, Suite::modular}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<CheckSpec> check_registry() {
  Builder b;
  add_gamma(b);
  add_balls(b);
  add_hyper(b);
  add_elliptic(b);
  add_modular(b);
  std::sort(b.checks.begin(), b.checks.end(), [](const CheckSpec& x, const CheckSpec& y) { return x.id < y.id; });
  return std::move(b.checks);
}

std::vector<CheckSpec> checks_for(Suite s) {
  std::vector<CheckSpec> all = check_registry();
  if (s == Suite::all) return all;
  std::vector<CheckSpec> out;
  for (auto& c : all) {
    if (suite_of(c.id) == to_string(s)) out.push_back(std::move(c));
  }
  return out;
}

CheckResult run_check(const CheckSpec& spec, const RunOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.id = spec.id;
  const std::vector<double> xs = points_of(spec.domain, overrides.grid_n);
  result.points = static_cast<int>(xs.size());

  std::size_t at = 0;
  try {
    std::vector<double> fx(xs.size());
    for (at = 0; at < xs.size(); ++at) fx[at] = spec.evaluator(xs[at]);

    std::vector<double> res;
    switch (spec.kind) {
      case CheckKind::identity:
        res.resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) res[i] = std::abs(fx[i]);
        break;
      case CheckKind::inequality:
      case CheckKind::bracket:
        res.resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) res[i] = -fx[i];
        break;
      case CheckKind::monotonicity:
      case CheckKind::convexity:
        res = difference_residuals(spec, xs, fx);
        break;
    }
    // first index wins ties, so the reduction is order-independent
    result.max_residual = -kInf;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const double r = sanitize(res[i]);
      if (r > result.max_residual) {
        result.max_residual = r;
        result.argmax = xs[i];
      }
    }
    if (res.empty()) result.max_residual = 0.0;
    result.passed = result.max_residual <= spec.tolerance * overrides.tol_scale;
  } catch (const std::exception& e) {
    result.passed = false;
    result.max_residual = kInf;
    result.argmax = at < xs.size() ? xs[at] : 0.0;
    result.note = std::string("evaluator error: ") + e.what();
  }

  if (spec.advisory) {
    std::string verdict;
    if (!result.note.empty()) {
      verdict = result.note;
    } else if (result.passed) {
      verdict = "holds on this grid";
    } else {
      verdict = "violated at x = " + format_number(result.argmax);
    }
    result.note = spec.note + ": " + verdict + "; grids cannot prove sharpness or settle the claim";
    result.passed = true;
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Report run_checks(std::vector<CheckSpec> specs, std::string suite_name, const RunOverrides& overrides) {
  std::sort(specs.begin(), specs.end(), [](const CheckSpec& x, const CheckSpec& y) { return x.id < y.id; });
  Report report;
  report.created_at = iso_now();
  report.suite = std::move(suite_name);
  report.results.resize(specs.size());

  unsigned workers = overrides.threads ? overrides.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, specs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) report.results[i] = run_check(specs[i], overrides);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  for (const auto& r : report.results) {
    ++report.summary.total;
    ++(r.passed ? report.summary.passed : report.summary.failed);
  }
  return report;
}

Report run_suite(Suite s, const RunOverrides& overrides) { return run_checks(checks_for(s), to_string(s), overrides); }

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace {

using Json = nlohmann::ordered_json;

Json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

double parse_number(std::string_view s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::domain, "malformed number '" + std::string(s) + "'");
  }
  return v;
}

double number_from_json(const Json& j) {
  if (j.is_string()) return parse_number(j.get<std::string>());
  return j.get<double>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // CRLF line endings
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorKind::domain, "unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr std::string_view kCsvHeader = "id,passed,max_residual,argmax,points,elapsed_ms";

}  // namespace

std::string serialize(const Report& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << kCsvHeader << "\r\n";
    for (const auto& r : report.results) {
      out << csv_field(r.id) << ',' << (r.passed ? "true" : "false") << ',' << format_number(r.max_residual) << ','
          << format_number(r.argmax) << ',' << r.points << ',' << format_number(r.elapsed_ms) << "\r\n";
    }
    return out.str();
  }
  Json j;
  j["created_at"] = report.created_at;
  j["suite"] = report.suite;
  j["results"] = Json::array();
  for (const auto& r : report.results) {
    Json e;
    e["id"] = r.id;
    e["passed"] = r.passed;
    e["max_residual"] = number_json(r.max_residual);
    e["argmax"] = number_json(r.argmax);
    e["points"] = r.points;
    e["elapsed_ms"] = number_json(r.elapsed_ms);
    e["note"] = r.note;
    j["results"].push_back(std::move(e));
  }
  j["summary"] = {{"total", report.summary.total}, {"passed", report.summary.passed}, {"failed", report.summary.failed}};
  return j.dump(2) + "\n";
}

Report parse_report(std::string_view text, ReportFormat format) {
  Report report;
  if (format == ReportFormat::csv) {
    const auto rows = parse_csv(text);
    if (rows.empty() || rows.front().size() != 6) throw Error(ErrorKind::domain, "CSV report lacks the header row");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& f = rows[i];
      if (f.size() != 6) throw Error(ErrorKind::domain, "CSV row " + std::to_string(i) + " has the wrong arity");
      CheckResult r;
      r.id = f[0];
      r.passed = f[1] == "true";
      r.max_residual = parse_number(f[2]);
      r.argmax = parse_number(f[3]);
      r.points = static_cast<int>(parse_number(f[4]));
      r.elapsed_ms = parse_number(f[5]);
      report.results.push_back(std::move(r));
    }
    for (const auto& r : report.results) {
      ++report.summary.total;
      ++(r.passed ? report.summary.passed : report.summary.failed);
    }
    return report;
  }
  Json j;
  try {
    j = Json::parse(text);
    report.created_at = j.at("created_at").get<std::string>();
    report.suite = j.at("suite").get<std::string>();
    for (const auto& e : j.at("results")) {
      CheckResult r;
      r.id = e.at("id").get<std::string>();
      r.passed = e.at("passed").get<bool>();
      r.max_residual = number_from_json(e.at("max_residual"));
      r.argmax = number_from_json(e.at("argmax"));
      r.points = e.at("points").get<int>();
      r.elapsed_ms = number_from_json(e.at("elapsed_ms"));
      r.note = e.value("note", std::string{});
      report.results.push_back(std::move(r));
    }
    const Json& s = j.at("summary");
    report.summary = {s.at("total").get<int>(), s.at("passed").get<int>(), s.at("failed").get<int>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::domain, std::string("malformed JSON report: ") + e.what());
  }
  return report;
}

}  // namespace specfun
