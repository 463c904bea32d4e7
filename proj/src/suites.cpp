#include "sphrhs/suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sphrhs/legendre.hpp"
#include "sphrhs/rhs_diagnostics.hpp"
#include "sphrhs/sphere_transform.hpp"
#include "sphrhs/structural_ops.hpp"

namespace sphrhs {

namespace {

double relative_margin(const BoundReport& r) {
  const double scale = std::max(std::abs(r.rhs), std::abs(r.lhs));
  return scale > 0.0 ? r.margin / scale : 0.0;
}

BoundReport with(BoundReport r, int lmax, std::uint64_t seed, int n = 0) {
  r.lmax = lmax;
  r.seed = seed;
  r.n = n;
  return r;
}

// Unit-size coefficients at every degree, so high l is exercised as much as low l.
HarmonicExpansion flat_test_function(std::uint64_t seed, std::uint64_t trial, int lmax) {
  auto rng = trial_rng(seed, trial);
  return random_test_function(rng, lmax, 0.0);
}

}  // namespace

BoundReport roundtrip_check(int lmax, int trials, std::uint64_t seed, double tol) {
  const SphereGrid grid = make_grid(lmax);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const HarmonicExpansion f = flat_test_function(seed, std::uint64_t(t), lmax);
    worst = std::max(worst, max_abs_difference(analyze(synthesize(f, grid), lmax), f));
  }
  return with(make_report("roundtrip", "analyze(synthesize(f)) = f", worst, 0.0, tol), lmax, seed);
}

BoundReport parseval_check(int lmax, int trials, std::uint64_t seed, double tol) {
  const SphereGrid grid = make_grid(lmax);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const HarmonicExpansion f = flat_test_function(seed, std::uint64_t(t), lmax);
    SampledField field = synthesize(f, grid);
    for (auto& v : field.samples) v = std::norm(v);
    const double quadrature = integrate(field).real();
    const double spectral = std::pow(hilbert_norm(f), 2);
    worst = std::max(worst, std::abs(quadrature - spectral) / spectral);
  }
  return with(make_report("parseval", "int |f|^2 dOmega = sum |f_{l,m}|^2", worst, 0.0, tol),
              lmax, seed);
}

BoundReport pointwise_equivalence_check(std::string_view op, int lmax, std::uint64_t seed,
                                        double tol) {
  PointwiseMap map;
  if (op == "cosTheta") {
    map = [](double theta, double, complex v) { return std::cos(theta) * v; };
  } else if (op == "sinExp+") {
    map = [](double theta, double phi, complex v) { return std::sin(theta) * std::polar(1.0, phi) * v; };
  } else if (op == "sinExp-") {
    map = [](double theta, double phi, complex v) { return std::sin(theta) * std::polar(1.0, -phi) * v; };
  } else {
    throw std::invalid_argument("no pointwise form for operator '" + std::string(op) + "'");
  }
  const OperatorExpression banded = structural_operator(op);
  double worst = 0.0;
  for (int t = 0; t < 4; ++t) {
    const HarmonicExpansion f = flat_test_function(seed, std::uint64_t(t), lmax);
    const HarmonicExpansion image = banded.apply(f);
    worst = std::max(worst, max_abs_difference(image, pointwise_oracle(f, map, lmax + 1)));
  }
  return with(make_report("pointwise:" + std::string(op), "banded " + std::string(op) +
                                                              " = multiplication by its symbol",
                          worst, 0.0, tol),
              lmax, seed);
}

BoundReport dtheta_fd_check(int lmax, std::uint64_t seed, double h) {
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    auto rng = trial_rng(seed, std::uint64_t(t));
    const HarmonicExpansion f = random_test_function(rng, lmax, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 10; ++k) {
      // keep the stencil clear of the poles
      const SpherePoint p(0.3 + (kPi - 0.6) * unit(rng), kTwoPi * unit(rng));
      worst = std::max(worst, std::abs(dtheta_fd_order(f, p, h) - 2.0));
    }
  }
  BoundReport r = make_report("dtheta_fd_order",
                              "d/dtheta Y_l^m = -1/2[a e^{i phi} Y_l^{m-1} - b e^{-i phi} Y_l^{m+1}]",
                              worst, 0.2, 0.0);
  return with(r, lmax, seed);
}

BoundReport product_law_check(int lmax, double tol) {
  const int out = 2 * lmax;
  const SphereGrid grid = make_grid(out);
  std::vector<SampledField> y;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      y.push_back(synthesize(HarmonicExpansion::basis({l, m}, 1.0 / std::sqrt(l + 0.5)), grid));
    }
  }
  double worst = 0.0;
  for (int l1 = 0; l1 <= lmax; ++l1) {
    for (int m1 = -l1; m1 <= l1; ++m1) {
      const SampledField& a = y[triangular_offset(l1, m1)];
      for (int l2 = 0; l2 <= lmax; ++l2) {
        for (int m2 = -l2; m2 <= l2; ++m2) {
          SampledField prod = a;
          const SampledField& b = y[triangular_offset(l2, m2)];
          for (std::size_t k = 0; k < prod.samples.size(); ++k) prod.samples[k] *= b.samples[k];
          worst = std::max(worst, max_abs_difference(sh_product({l1, m1}, {l2, m2}),
                                                     analyze(prod, out)));
        }
      }
    }
  }
  return with(make_report("product_law",
                          "Y_l1^m1 Y_l2^m2 = (2pi)^{-1/2} sum_L <l1 0 l2 0|L 0><l1 m1 l2 m2|L M> Y_L^M",
                          worst, 0.0, tol),
              lmax, 0);
}

BoundReport selection_rule_check(int lmax) {
  double worst = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    worst = std::max(worst, std::abs(clebsch_gordan(1, 0, l, 0, l, 0)));
    if (l == 0) continue;
    for (int m1 = -1; m1 <= 1; ++m1) {
      for (int m2 = -l; m2 <= l; ++m2) {
        if (std::abs(m1 + m2) > l) continue;
        worst = std::max(worst, std::abs(sh_product({1, m1}, {l, m2}).get(l, m1 + m2)));
      }
    }
  }
  return with(make_report("selection_rule", "<1 0 l 0|l 0> = 0", worst, 0.0, 0.0), lmax, 0);
}

BoundReport inv_sin_rejection_check() {
  const CoefficientOperator op = inv_sin_op_literal();
  HarmonicExpansion with_zero(3);
  with_zero.at(2, 0) = 1.0;
  with_zero.at(2, 1) = 1.0;
  HarmonicExpansion without_zero(3);
  without_zero.at(2, 1) = 1.0;
  without_zero.at(3, -2) = 0.5;

  double failures = 0.0;
  try {
    (void)op.apply(with_zero);
    failures += 1.0;
  } catch (const DomainViolation&) {
  }
  try {
    (void)op.apply(without_zero);
  } catch (const DomainViolation&) {
    failures += 1.0;
  }
  return make_report("inv_sin_domain", "1/sin(Theta) undefined on m = 0 components", failures,
                     0.0, 0.0);
}

BoundReport structure_constant_check(const ClosureResult& closure, double tol) {
  struct Expected {
    const char* a;
    const char* b;
    const char* name;
    double value;
  };
  static const Expected expected[] = {
      {"M", "J+", "J+", 1.0},  {"M", "J-", "J-", -1.0}, {"L", "K+", "K+", 1.0},
      {"L", "K-", "K-", -1.0}, {"J+", "J-", "M", 2.0},
  };
  double worst = 0.0;
  for (const auto& e : expected) {
    const ClosureEntry& entry = closure.entry(e.a, e.b);
    for (std::size_t k = 0; k < closure.basis_names.size(); ++k) {
      const double want = closure.basis_names[k] == e.name ? e.value : 0.0;
      worst = std::max(worst, std::abs(entry.coefficients[k] - want));
    }
  }
  BoundReport r = make_report("so32_structure_constants",
                              "[M,J+-] = +-J+-, [L,K+-] = +-K+-, [J+,J-] = 2M", worst, 0.0, tol);
  r.lmax = closure.report.lmax;
  return r;
}

BoundReport literal_cartan_check(const ClosureResult& closure, double tol) {
  // the three pairs whose commutator carries a multiple of the identity
  auto shifted = [](const ClosureEntry& e) {
    return (e.a == "K+" && e.b == "K-") || (e.a == "R+" && e.b == "R-") ||
           (e.a == "S+" && e.b == "S-");
  };
  double worst_other = 0.0;
  double least_shifted = INFINITY;
  for (const auto& e : closure.entries) {
    if (shifted(e)) {
      least_shifted = std::min(least_shifted, e.literal_residual);
    } else {
      worst_other = std::max(worst_other, e.literal_residual);
    }
  }
  BoundReport r = make_report("so32_literal_cartan",
                              "only [K+,K-], [R+,R-], [S+,S-] need L+1/2 instead of L",
                              worst_other, 0.0, tol);
  r.pass = r.pass && least_shifted > 0.5;
  r.lmax = closure.report.lmax;
  r.columns = {"min_literal_residual_shifted_pairs", "max_literal_residual_other_pairs"};
  r.table = {{least_shifted, worst_other}};
  return r;
}

BoundReport point_functional_check(int functions, int points, std::uint64_t seed, int lmax,
                                   int order) {
  BoundReport worst;
  bool have = false;
  for (int t = 0; t < functions; ++t) {
    auto rng = trial_rng(seed, std::uint64_t(t));
    const HarmonicExpansion f = random_test_function(rng, lmax, 2.0);
    for (const SpherePoint& p : random_points(rng, std::size_t(points))) {
      BoundReport r = bound_point_functional(f, p, order);
      if (!have || relative_margin(r) < relative_margin(worst)) {
        worst = r;
        have = true;
      }
    }
  }
  return with(worst, lmax, seed, order);
}

BoundReport weak_eigen_check(int functions, int points, std::uint64_t seed, int lmax) {
  BoundReport worst;
  bool have = false;
  for (int t = 0; t < functions; ++t) {
    auto rng = trial_rng(seed, std::uint64_t(t));
    const HarmonicExpansion f = random_test_function(rng, lmax, 1.0);
    for (const SpherePoint& p : random_points(rng, std::size_t(points))) {
      BoundReport r = weak_eigen_cos(f, p);
      if (!have || r.lhs / r.tol > worst.lhs / worst.tol) {
        worst = r;
        have = true;
      }
    }
  }
  return with(worst, lmax, seed);
}

BoundReport continuity_scan(std::string_view bound, int max_n, int trials, std::uint64_t seed,
                            int lmax) {
  BoundFunction fn;
  if (bound == "K+") {
    fn = bound_Kplus;
  } else if (bound == "L") {
    fn = bound_L;
  } else if (bound == "cosTheta") {
    fn = bound_cos;
  } else if (bound == "dThetaLit") {
    fn = bound_dtheta;
  } else {
    throw std::invalid_argument("no continuity bound for '" + std::string(bound) + "'");
  }
  int failures = 0;
  BoundReport r = bound_scan(fn, max_n, trials, seed, lmax, &failures);
  r.pass = failures == 0;
  r.columns = {"max_n", "trials", "failed_checks"};
  r.table = {{double(max_n), double(trials), double(failures)}};
  return r;
}

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (tol && !(*tol >= 0.0)) throw std::invalid_argument("tol must be non-negative");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"transforms", "algebra", "structural",
                                              "bounds",     "pde",     "all"};
  return names;
}

std::vector<BoundReport> run_suite(const SuiteConfig& config) {
  config.validate();
  const int L = config.lmax;
  const std::uint64_t seed = config.seed;
  auto tol = [&](double fallback) { return config.tol.value_or(fallback); };
  const bool all = config.suite == "all";
  std::vector<BoundReport> out;
  auto add = [&](BoundReport r) {
    r.seed = seed;
    out.push_back(std::move(r));
  };

  if (all || config.suite == "transforms") {
    add(orthonormality_check(L, tol(1e-10)));
    add(roundtrip_check(L, config.trials, seed, tol(1e-12)));
    add(parseval_check(L, config.trials, seed, tol(1e-10)));
    add(uniform_bound_check(L, 2048, tol(1e-12)));
  }
  if (all || config.suite == "algebra") {
    const ClosureResult closure = closure_check(std::max(L, 4), tol(1e-10));
    add(closure.report);
    add(structure_constant_check(closure, tol(1e-12)));
    add(literal_cartan_check(closure, tol(1e-10)));
    add(so3_casimir_check(L, tol(1e-12)));
  }
  if (all || config.suite == "structural") {
    for (const char* op : {"cosTheta", "sinExp+", "sinExp-"}) {
      add(pointwise_equivalence_check(op, L, seed, tol(1e-10)));
    }
    add(dtheta_fd_check(std::min(L, 8), seed));
    add(product_law_check(std::min(L, 8), tol(1e-9)));
    add(selection_rule_check(L));
    add(inv_sin_rejection_check());
    auto rng = trial_rng(seed, 0);
    HarmonicExpansion f = random_test_function(rng, std::min(L, 8), 2.0);
    // sinExp+ maps m = -1 to m = 0, where the formal inverse is undefined
    for (int l = 1; l <= f.lmax(); ++l) f.at(l, -1) = 0.0;
    add(exp_iphi_gap_scan(f, {0, 1, 2, 4, 8}, 4 * std::min(L, 8) + 16));
    add(exp_iphi_norm_scan(config.trials, seed, L));
  }
  if (all || config.suite == "bounds") {
    add(continuity_scan("K+", 4, config.trials, seed, L));
    add(continuity_scan("L", 4, config.trials, seed, L));
    add(continuity_scan("cosTheta", 4, config.trials, seed, L));
    add(continuity_scan("dThetaLit", 2, config.trials, seed, L));
    add(point_functional_check(config.trials, 100, seed, L, 3));
    add(weak_eigen_check(config.trials, 10, seed, L));
  }
  if (all || config.suite == "pde") {
    // the l <= 8 residual budget; higher degrees need a smaller step
    add(pde_convergence_scan(std::min(L, 8)));
  }
  return out;
}

}  // namespace sphrhs
