#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "specfun/balls.hpp"
#include "specfun/elliptic.hpp"
#include "specfun/error.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hyper.hpp"
#include "specfun/modular.hpp"
#include "specfun/verify.hpp"

namespace specfun::cli {

namespace {

struct Evaluated {
  double value;
  std::optional<double> abs_err;
};

struct EvalEntry {
  std::string usage;
  std::size_t arity;
  std::function<Evaluated(const std::vector<double>&)> fn;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const char* first = s.data() + (s.starts_with('+') ? 1 : 0);
  const auto r = std::from_chars(first, s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

int as_int(double x) {
  if (x != std::floor(x) || std::abs(x) > 1e9) throw UsageError("expected an integer argument");
  return static_cast<int>(x);
}

Evaluated plain(double v) { return {v, std::nullopt}; }
Evaluated with_error(const EvalResult& r) { return {r.value, r.abs_err_estimate}; }
Evaluated with_error(const GammaEstimate& g) { return {g.value, g.error_bound}; }

const std::map<std::string, EvalEntry>& eval_registry() {
  using V = const std::vector<double>&;
  static const std::map<std::string, EvalEntry> registry{
      {"gamma", {"gamma x", 1, [](V a) { return plain(gamma(a[0])); }}},
      {"log_gamma", {"log_gamma x", 1, [](V a) { return plain(log_gamma(a[0])); }}},
      {"digamma", {"digamma x", 1, [](V a) { return plain(digamma(a[0])); }}},
      {"trigamma", {"trigamma x", 1, [](V a) { return plain(trigamma(a[0])); }}},
      {"beta", {"beta a b", 2, [](V a) { return plain(beta(a[0], a[1])); }}},
      {"theta", {"theta x", 1, [](V a) { return plain(theta(a[0])); }}},
      {"mono_f", {"mono_f x", 1, [](V a) { return plain(mono_f(a[0])); }}},
      {"ramanujan_gamma", {"ramanujan_gamma x terms", 2,
                           [](V a) { return with_error(ramanujan_gamma(a[0], as_int(a[1]))); }}},
      {"detemple_gamma", {"detemple_gamma n", 1,
                          [](V a) { return with_error(detemple_euler_gamma(as_int(a[0]))); }}},
      {"karatsuba_gamma", {"karatsuba_gamma k", 1,
                           [](V a) { return with_error(karatsuba_euler_gamma(as_int(a[0]))); }}},
      {"ball_volume", {"ball_volume n", 1, [](V a) { return plain(ball_volume(as_int(a[0]))); }}},
      {"sphere_area", {"sphere_area n", 1, [](V a) { return plain(sphere_area(as_int(a[0]))); }}},
      {"volume_root", {"volume_root n", 1, [](V a) { return plain(volume_root(as_int(a[0]))); }}},
      {"pochhammer", {"pochhammer a n", 2, [](V a) { return plain(pochhammer(a[0], as_int(a[1]))); }}},
      {"f21", {"f21 a b c x", 4, [](V a) { return with_error(f21({a[0], a[1], a[2]}, a[3])); }}},
      {"ramanujan_r", {"ramanujan_r a b", 2, [](V a) { return plain(ramanujan_R(a[0], a[1])); }}},
      {"k_function", {"k_function a b x", 3, [](V a) { return plain(k_function(a[0], a[1], a[2])); }}},
      {"l_function", {"l_function a b c x", 4,
                      [](V a) { return plain(l_function({a[0], a[1], a[2]}, a[3])); }}},
      {"agm", {"agm x y", 2, [](V a) { return plain(agm(a[0], a[1])); }}},
      {"ellip_k", {"ellip_k r", 1, [](V a) { return plain(ellip_k(a[0])); }}},
      {"ellip_e", {"ellip_e r", 1, [](V a) { return plain(ellip_e(a[0])); }}},
      {"k_a", {"k_a a r", 2, [](V a) { return plain(k_a(SignatureParam(a[0]), a[1])); }}},
      {"e_a", {"e_a a r", 2, [](V a) { return plain(e_a(SignatureParam(a[0]), a[1])); }}},
      {"mu", {"mu r", 1, [](V a) { return plain(mu(a[0])); }}},
      {"mu_a", {"mu_a a r", 2, [](V a) { return plain(mu_a(SignatureParam(a[0]), a[1])); }}},
      {"phi_k", {"phi_k K r", 2, [](V a) { return plain(phi_k(a[0], a[1])); }}},
      {"phi_k_a", {"phi_k_a a K r", 3, [](V a) { return plain(phi_k_a(SignatureParam(a[0]), a[1], a[2])); }}},
      {"ellipse_perimeter", {"ellipse_perimeter b", 1, [](V a) { return plain(ellipse_perimeter(a[0])); }}},
      {"modular_beta", {"modular_beta a p r", 3, [](V a) {
                          return plain(solve_modular({a[0], a[1]}, a[2]).beta);
                        }}},
  };
  return registry;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  const auto& reg = eval_registry();
  const auto it = reg.find(name);
  if (it == reg.end()) {
    err << "unknown function '" << name << "'; known:";
    for (const auto& [n, e] : reg) err << ' ' << n;
    err << '\n';
    return kExitUsage;
  }
  const EvalEntry& entry = it->second;
  if (raw.size() != entry.arity) {
    err << "usage: eval " << entry.usage << '\n';
    return kExitUsage;
  }
  try {
    std::vector<double> args;
    for (const auto& s : raw) args.push_back(parse_real(s));
    const Evaluated r = entry.fn(args);
    out << format_number(r.value) << '\n';
    if (r.abs_err) out << "abs_err " << format_number(*r.abs_err) << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "eval " << name << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> grid;
  double tol_scale = 1.0;
  unsigned threads = 0;
  std::string json_path;
  std::string csv_path;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(opt.suite);
  if (!suite) {
    err << "unknown suite '" << opt.suite << "' (all, gamma, balls, hyper, elliptic, modular)\n";
    return kExitUsage;
  }
  RunOverrides ov;
  ov.grid_n = opt.grid;
  ov.tol_scale = opt.tol_scale;
  ov.threads = opt.threads;
  const Report report = run_suite(*suite, ov);

  const bool to_csv = !opt.csv_path.empty();
  const std::string path = to_csv ? opt.csv_path : opt.json_path;
  const std::string text = serialize(report, to_csv ? ReportFormat::csv : ReportFormat::json);
  if (path.empty() || path == "-") {
    out << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
      err << "cannot write report to '" << path << "'\n";
      return kExitIo;
    }
    out << report.summary.passed << '/' << report.summary.total << " checks passed, report written to " << path
        << '\n';
  }
  for (const auto& r : report.results) {
    if (!r.passed) err << "FAILED " << r.id << " max_residual=" << format_number(r.max_residual) << '\n';
  }
  return report.summary.failed == 0 ? kExitOk : kExitCheckFailed;
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void table_theta(std::ostream& out) {
  static constexpr const char* labels[] = {"0",    "1/12", "2/12", "3/12",  "4/12",  "5/12", "6/12",
                                           "7/12", "8/12", "9/12", "10/12", "11/12", "1",    "inf"};
  char line[96];
  std::snprintf(line, sizeof line, "%-6s %-9s %-9s %s\n", "x", "computed", "record", "gap");
  out << line;
  for (std::size_t i = 0; i < theta_record.size(); ++i) {
    const double t = theta(theta_record[i].x);
    std::snprintf(line, sizeof line, "%-6s %-9s %-9s %s\n", labels[i], fixed4(t).c_str(),
                  fixed4(theta_record[i].printed).c_str(), sci(std::abs(t - theta_record[i].printed)).c_str());
    out << line;
  }
}

void table_gamma_const(std::ostream& out) {
  char line[160];
  out << "DeTemple R_n = H_n - log(n + 1/2)\n";
  std::snprintf(line, sizeof line, "%-6s %-20s %-11s %-11s %s\n", "n", "R_n", "R_n-gamma", "lower", "upper");
  out << line;
  for (int n : {1, 10, 100, 1000}) {
    const DeTempleTerms t = detemple(n);
    const double nd = n;
    std::snprintf(line, sizeof line, "%-6d %-20s %-11s %-11s %s\n", n, format_number(t.r_n).c_str(),
                  sci(t.r_minus_gamma).c_str(), sci(1.0 / (24.0 * (nd + 1) * (nd + 1))).c_str(),
                  sci(1.0 / (24.0 * nd * nd)).c_str());
    out << line;
  }
  out << "\nKaratsuba estimate with bound c_k = 2/(12k)! + 2k^2 e^-k\n";
  std::snprintf(line, sizeof line, "%-6s %-20s %-11s %s\n", "k", "estimate", "|est-gamma|", "c_k");
  out << line;
  for (int k : {1, 5, 10, 20}) {
    const GammaEstimate g = karatsuba_euler_gamma(k);
    std::snprintf(line, sizeof line, "%-6d %-20s %-11s %s\n", k, format_number(g.value).c_str(),
                  sci(std::abs(g.value - constants::euler_gamma)).c_str(), sci(karatsuba_bound(k)).c_str());
    out << line;
  }
}

}  // namespace

std::vector<std::string> eval_function_names() {
  std::vector<std::string> names;
  for (const auto& [n, e] : eval_registry()) names.push_back(n);
  return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Special functions: evaluation, identity checks and reference tables", "specfun"};
  app.require_subcommand(1, 1);

  std::string fn;
  std::vector<std::string> fn_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a function: eval <fn> <args...>");
  eval->add_option("function", fn, "Function name")->required();
  eval->add_option("args", fn_args, "Numeric arguments");
  eval->positionals_at_end();

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run an identity/inequality check suite");
  verify->add_option("--suite", vopt.suite, "all, gamma, balls, hyper, elliptic or modular");
  verify->add_option("--grid", vopt.grid, "Point count for continuous grids")->check(CLI::Range(2, 1000000));
  verify->add_option("--tol-scale", vopt.tol_scale, "Multiplier on every tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", vopt.threads, "Worker threads (0: hardware concurrency)");
  auto* json = verify->add_option("--json", vopt.json_path, "Write the JSON report to a path");
  auto* csv = verify->add_option("--csv", vopt.csv_path, "Write the CSV report to a path");
  json->excludes(csv);

  std::string which;
  auto* table = app.add_subcommand("table", "Print a reference table");
  table->add_option("which", which, "theta or gamma-const")
      ->required()
      ->check(CLI::IsMember({"theta", "gamma-const"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (eval->parsed()) return cmd_eval(fn, fn_args, out, err);
  if (verify->parsed()) return cmd_verify(vopt, out, err);
  if (which == "theta") {
    table_theta(out);
  } else {
    table_gamma_const(out);
  }
  return kExitOk;
}

}  // namespace specfun::cli
