#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "sphrhs/expression_parser.hpp"
#include "sphrhs/io.hpp"
#include "sphrhs/rhs_diagnostics.hpp"
#include "sphrhs/structural_ops.hpp"
#include "sphrhs/sphere_transform.hpp"
#include "sphrhs/suites.hpp"

namespace sphrhs::cli {

namespace {

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = 42;
  std::string out;
  std::optional<int> lmax;
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

int cmd_transform(const Globals& g, const std::string& direction, const std::string& in,
                  std::ostream& out) {
  if (direction == "analyze") {
    const SampledField field = io::read_field(in);
    const int lmax = g.lmax.value_or(field.grid.lmax);
    if (lmax < 0 || lmax > field.grid.lmax) {
      throw io::ConsistencyError("cannot analyze to degree " + std::to_string(lmax) +
                                 " from a grid exact to degree " + std::to_string(field.grid.lmax));
    }
    emit(g.out, io::format_coefficients(analyze(field, lmax)), out);
  } else {
    const HarmonicExpansion f = io::read_coefficients(in);
    const int lmax = g.lmax.value_or(f.lmax());
    if (lmax < f.lmax()) {
      throw io::ConsistencyError("grid degree " + std::to_string(lmax) +
                                 " is below the expansion degree " + std::to_string(f.lmax()));
    }
    emit(g.out, io::format_field(synthesize(f, make_grid(lmax))), out);
  }
  return kSuccess;
}

int cmd_apply(const Globals& g, const std::string& expr, const std::string& in, std::ostream& out) {
  const OperatorExpression op = parse_operator_expression(expr);
  const HarmonicExpansion f = io::read_coefficients(in);
  emit(g.out, io::format_coefficients(op.apply(f)), out);
  return kSuccess;
}

int cmd_verify(const Globals& g, const std::string& suite, int trials, std::ostream& out) {
  SuiteConfig config;
  config.suite = suite;
  config.lmax = g.lmax.value_or(16);
  config.trials = trials;
  config.seed = g.seed;
  config.tol = g.tol;
  config.out = g.out;
  config.validate();
  const std::vector<BoundReport> reports = run_suite(config);
  const std::string doc = io::format_reports(reports);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (config.out.empty() || config.out == "-") {
    out << doc;
  } else {
    io::write_text(config.out, doc);
    for (const auto& r : reports) {
      out << (r.informational ? "INFO" : r.pass ? "PASS" : "FAIL") << "  " << r.check;
      if (!r.informational) out << "  margin=" << g17(r.margin);
      out << '\n';
    }
  }
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_eval(const Globals& g, const std::string& in, double theta, double phi,
             std::optional<int> bound, std::ostream& out) {
  const HarmonicExpansion f = io::read_coefficients(in);
  const SpherePoint p(theta, phi);
  const complex v = point_eval(f, p);
  std::string text = "value " + g17(v.real()) + " " + g17(v.imag()) + "\n";
  int status = kSuccess;
  if (bound) {
    const BoundReport r = bound_point_functional(f, p, *bound);
    text += "bound p=" + std::to_string(*bound) + " C_p=" + g17(functional_constant(*bound)) +
            " lhs=" + g17(r.lhs) + " rhs=" + g17(r.rhs) + " margin=" + g17(r.margin) +
            (r.pass ? " pass" : " fail") + "\n";
    if (!r.pass) status = kVerificationFailed;
  }
  emit(g.out, text, out);
  return status;
}

int cmd_product(const Globals& g, int l1, int m1, int l2, int m2, std::ostream& out) {
  emit(g.out, io::format_coefficients(sh_product(HarmonicIndex(l1, m1), HarmonicIndex(l2, m2))), out);
  return kSuccess;
}

int cmd_bench(const Globals& g, int repeats, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const int lmax = g.lmax.value_or(64);
  if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
  auto time = [&](const std::function<void()>& body) {
    double best = INFINITY;
    for (int r = 0; r < repeats; ++r) {
      const auto t0 = clock::now();
      body();
      best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
    }
    return best;
  };
  auto rng = trial_rng(g.seed, 0);
  const HarmonicExpansion f = random_test_function(rng, lmax, 0.0);
  const SphereGrid grid = make_grid(lmax);
  const SampledField field = synthesize(f, grid);

  std::string text = "operation,lmax,seconds\n";
  auto row = [&](const char* name, int degree, double seconds) {
    text += std::string(name) + "," + std::to_string(degree) + "," + g17(seconds) + "\n";
  };
  row("make_grid", lmax, time([&] { (void)make_grid(lmax); }));
  row("synthesize", lmax, time([&] { (void)synthesize(f, grid); }));
  row("analyze", lmax, time([&] { (void)analyze(field, lmax); }));
  const OperatorExpression k = parse_operator_expression("[K+,K-]");
  row("apply_[K+,K-]", lmax, time([&] { (void)k.apply(f); }));
  const int closure_lmax = std::min(std::max(lmax, 4), 16);
  row("closure_check", closure_lmax, time([&] { (void)closure_check(closure_lmax); }));
  emit(g.out, text, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical harmonic expansions, banded operators and their checks", "sphrhs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  double tol = 0.0;
  int lmax = 0;
  auto* tol_opt = app.add_option("--tol", tol, "tolerance override for identity checks");
  app.add_option("--seed", g.seed, "64-bit seed for all randomness")->capture_default_str();
  app.add_option("--out", g.out, "output file (stdout if omitted)");
  auto* lmax_opt = app.add_option("--lmax", lmax, "truncation degree");

  std::string direction, in_path, op_expr, suite = "all";
  int trials = 100, repeats = 3;
  double theta = 0.0, phi = 0.0;
  int bound_order = 0;

  auto* transform = app.add_subcommand("transform", "analyze a field file or synthesize a coefficient file");
  transform->add_option("direction", direction, "analyze | synthesize")
      ->required()
      ->check(CLI::IsMember({"analyze", "synthesize"}));
  transform->add_option("--in", in_path, "input file")->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply an operator expression to a coefficient file");
  apply_cmd->add_option("--op", op_expr, "expression such as \"K+\" or \"[J+,J-]\"")->required();
  apply_cmd->add_option("--in", in_path, "coefficient file")->required();

  auto* verify = app.add_subcommand("verify", "run check suites and write a report");
  verify->add_option("--suite", suite, "transforms | algebra | structural | bounds | pde | all")
      ->capture_default_str()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", trials, "random trials per check")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "evaluate a coefficient file at a point");
  eval->add_option("--in", in_path, "coefficient file")->required();
  eval->add_option("--theta", theta, "polar angle in [0, pi]")->required();
  eval->add_option("--phi", phi, "azimuth in [0, 2pi)")->required();
  auto* bound_opt = eval->add_option("--bound", bound_order, "also certify |f| <= C_p ||f||_p");

  int l1 = 0, m1 = 0, l2 = 0, m2 = 0;
  auto* product = app.add_subcommand("product", "expansion of the product Y_l1^m1 Y_l2^m2");
  product->add_option("--l1", l1)->required();
  product->add_option("--m1", m1)->required();
  product->add_option("--l2", l2)->required();
  product->add_option("--m2", m2)->required();

  auto* bench = app.add_subcommand("bench", "time transforms and operator application");
  bench->add_option("--repeats", repeats, "timing repetitions (best is kept)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (*tol_opt) g.tol = tol;
  if (*lmax_opt) g.lmax = lmax;

  try {
    if (*transform) return cmd_transform(g, direction, in_path, out);
    if (*apply_cmd) return cmd_apply(g, op_expr, in_path, out);
    if (*verify) return cmd_verify(g, suite, trials, out);
    if (*eval) {
      return cmd_eval(g, in_path, theta, phi,
                      *bound_opt ? std::optional<int>(bound_order) : std::nullopt, out);
    }
    if (*product) return cmd_product(g, l1, m1, l2, m2, out);
    if (*bench) return cmd_bench(g, std::max(repeats, 1), out);
  } catch (const io::IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const io::ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const DomainViolation& e) {
    err << "consistency error: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const io::FormatError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sphrhs::cli
