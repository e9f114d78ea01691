#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specfun/kernel.hpp"

namespace specfun {

enum class CheckKind { identity, inequality, monotonicity, convexity, bracket };

const char* to_string(CheckKind k);

// Monotonicity checks read increasing/decreasing, convexity checks
// convex/concave; identity, inequality and bracket checks ignore it.
enum class Direction { none, increasing, decreasing, convex, concave };

// Either a continuous grid (resized by the --grid override) or a fixed list
// of abscissas such as integer dimensions or parameter-draw indices.
using CheckDomain = std::variant<Grid, std::vector<double>>;

// Evaluator contract by kind:
//   identity                 residual, compared in absolute value
//   inequality, bracket      signed relative margin, positive when the claim holds
//   monotonicity, convexity  the function itself; the harness takes differences
struct CheckSpec {
  std::string id;
  std::string anchor;
  CheckKind kind = CheckKind::identity;
  double tolerance = 1e-12;
  std::function<double(double)> evaluator;
  CheckDomain domain = std::vector<double>{};
  Direction direction = Direction::none;
  // Advisory checks (sharpness probes, grid observations) always pass; the
  // note says what the grid showed.
  bool advisory = false;
  // Prefix for the advisory verdict written into CheckResult::note.
  std::string note;
};

struct CheckResult {
  std::string id;
  bool passed = false;
  double max_residual = 0.0;
  double argmax = 0.0;
  int points = 0;
  double elapsed_ms = 0.0;
  std::string note;

  bool operator==(const CheckResult&) const = default;
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;

  bool operator==(const Summary&) const = default;
};

struct Report {
  std::string created_at;
  std::string suite;
  std::vector<CheckResult> results;
  Summary summary;

  bool operator==(const Report&) const = default;
};

enum class Suite { all, gamma, balls, hyper, elliptic, modular };

const char* to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

struct RunOverrides {
  std::optional<int> grid_n;
  double tol_scale = 1.0;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Every registered check, sorted by id.
std::vector<CheckSpec> check_registry();
std::vector<CheckSpec> checks_for(Suite s);

// Slack for the finite-difference kinds.
inline constexpr double kMonotoneSlack = 1e-12;
inline constexpr double kConvexSlack = 1e-10;

CheckResult run_check(const CheckSpec& spec, const RunOverrides& overrides = {});
Report run_checks(std::vector<CheckSpec> specs, std::string suite_name, const RunOverrides& overrides = {});
Report run_suite(Suite s, const RunOverrides& overrides = {});

enum class ReportFormat { json, csv };

std::string serialize(const Report& report, ReportFormat format);
// JSON restores every field; CSV carries no created_at, suite or note.
Report parse_report(std::string_view text, ReportFormat format);

// Shortest round-trip decimal; non-finite values print as inf, -inf, nan.
std::string format_number(double x);

}  // namespace specfun
