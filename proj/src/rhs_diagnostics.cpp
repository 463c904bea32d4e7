#include "sphrhs/rhs_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "sphrhs/so32_algebra.hpp"
#include "sphrhs/sphere_transform.hpp"
#include "sphrhs/structural_ops.hpp"

namespace sphrhs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BoundReport finish(BoundReport r, const HarmonicExpansion& f, int n) {
  r.lmax = f.lmax();
  r.n = n;
  return r;
}

double relative_margin(const BoundReport& r) {
  const double scale = std::max(std::abs(r.rhs), std::abs(r.lhs));
  return scale > 0.0 ? r.margin / scale : 0.0;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ULL)));
}

HarmonicExpansion random_test_function(std::mt19937_64& rng, int lmax, double decay) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  HarmonicExpansion f(lmax);
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      f.at(l, m) = std::pow(l + std::abs(m) + 1.0, -decay) * complex{re, im};
    }
  }
  return f;
}

std::vector<SpherePoint> random_points(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SpherePoint> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double x = 2.0 * unit(rng) - 1.0;  // uniform on the sphere
    pts.push_back(SpherePoint::wrapped(std::acos(x), kTwoPi * unit(rng)));
  }
  return pts;
}

BoundReport bound_Kplus(const HarmonicExpansion& f, int n) {
  const double lhs = graded_norm(generator("K+").apply(f), n);
  const double rhs = std::pow(2.0, n) * graded_norm(f, n + 1);
  return finish(make_report("bound_Kplus", "||K+ f||_n <= 2^n ||f||_{n+1}", lhs, rhs, 0.0), f, n);
}

BoundReport bound_L(const HarmonicExpansion& f, int n) {
  const double lhs = graded_norm(generator("L").apply(f), n);
  const double rhs = graded_norm(f, n + 1);
  return finish(make_report("bound_L", "||L f||_n <= ||f||_{n+1}", lhs, rhs, 0.0), f, n);
}

BoundReport bound_cos(const HarmonicExpansion& f, int n) {
  const double lhs = graded_norm(cos_theta_op().apply(f), n);
  const double rhs = 2.0 * graded_norm(f, n + 1);
  return finish(make_report("bound_cos", "||cos(Theta) f||_n <= 2 ||f||_{n+1}", lhs, rhs, 0.0), f,
                n);
}

BoundReport bound_dtheta(const HarmonicExpansion& f, int n) {
  const double lhs = graded_norm(dtheta_op_literal().apply(f), n);
  const double rhs = 0.5 * (graded_norm(f, 2 * n) + graded_norm(f, 2 * n + 2));
  return finish(make_report("bound_dtheta",
                            "||D_Theta f||_n <= (||f||_{2n} + ||f||_{2n+2}) / 2", lhs, rhs, 0.0),
                f, n);
}

double functional_constant(int p, int lmax_tail) {
  if (p < 2) throw std::invalid_argument("functional_constant requires p >= 2");
  if (lmax_tail < 0) throw std::invalid_argument("functional_constant requires lmax_tail >= 0");
  // with k = l + 1 the terms are (2k-1)^2 / k^{2p}; summed smallest first
  const int K = lmax_tail + 1;
  double sum = 0.0;
  for (int k = K; k >= 1; --k) {
    const double kk = k;
    sum += (2.0 * kk - 1.0) * (2.0 * kk - 1.0) / std::pow(kk, 2 * p);
  }
  // (2k-1)^2 <= 4k^2, and sum_{k>K} k^{2-2p} <= int_K^inf x^{2-2p} dx
  const double tail = 4.0 * std::pow(static_cast<double>(K), 3.0 - 2.0 * p) / (2.0 * p - 3.0);
  return std::sqrt((sum + tail) / (4.0 * kPi));
}

BoundReport bound_point_functional(const HarmonicExpansion& f, const SpherePoint& p, int order) {
  if (order < 2) throw std::invalid_argument("point functional bound requires order >= 2");
  const double lhs = std::abs(point_eval(f, p));
  // the default-precision constant is a 10^5-term sum; keep one per order
  static thread_local std::map<int, double> constants;
  auto it = constants.find(order);
  if (it == constants.end()) it = constants.emplace(order, functional_constant(order)).first;
  const double rhs = it->second * graded_norm(f, order);
  return finish(make_report("bound_point_functional", "|<theta,phi|f>| <= C_p ||f||_p", lhs, rhs,
                            0.0),
                f, order);
}

BoundReport weak_eigen_cos(const HarmonicExpansion& f, const SpherePoint& p) {
  const complex lhs = point_eval(cos_theta_op().apply(f), p);
  const complex rhs = std::cos(p.theta()) * point_eval(f, p);
  // |f(p)| <= ||f||_0 (lmax+1)/sqrt(4 pi) for any expansion of degree lmax
  const double scale = hilbert_norm(f) * (f.lmax() + 2.0) / std::sqrt(4.0 * kPi);
  return finish(make_report("weak_eigen_cos", "<theta,phi|cos(Theta) f> = cos(theta) <theta,phi|f>",
                            std::abs(lhs - rhs), 0.0, 1e-10 * std::max(scale, 1e-300)),
                f, 0);
}

double ContinuityClaim::constant(int n) const { return exponential ? std::pow(base, n) : base; }

double ContinuityClaim::rhs(const HarmonicExpansion& f, int n) const {
  double total = 0.0;
  for (const auto& [a, b] : norm_terms) total += graded_norm(f, a * n + b);
  return constant(n) * total;
}

ContinuityClaim registered_claim(const std::string& op) {
  if (op == "K+") return {op, "||K+ f||_n <= 2^n ||f||_{n+1}", 2.0, true, {{1, 1}}, 4};
  if (op == "L") return {op, "||L f||_n <= ||f||_{n+1}", 1.0, false, {{1, 1}}, 4};
  if (op == "M") return {op, "||M f||_n <= ||f||_{n+1}", 1.0, false, {{1, 1}}, 4};
  if (op == "cosTheta") {
    return {op, "||cos(Theta) f||_n <= 2 ||f||_{n+1}", 2.0, false, {{1, 1}}, 4};
  }
  if (op == "dThetaLit") {
    return {op, "||D_Theta f||_n <= (||f||_{2n} + ||f||_{2n+2}) / 2", 0.5, false, {{2, 0}, {2, 2}},
            2};
  }
  throw std::invalid_argument("no continuity claim registered for operator '" + op + "'");
}

namespace {

OperatorExpression claim_operator(const std::string& op) {
  for (const auto& name : generator_names()) {
    if (name == op) return generator(op);
  }
  return structural_operator(op);
}

}  // namespace

BoundReport continuity_criterion_check(const ContinuityClaim& claim, int trials,
                                       std::uint64_t seed, int lmax) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  const OperatorExpression op = claim_operator(claim.op);

  BoundReport worst;
  bool have = false;
  auto consider = [&](const HarmonicExpansion& f) {
    const HarmonicExpansion image = op.apply(f);
    for (int n = 0; n <= claim.max_n; ++n) {
      BoundReport r = make_report("continuity:" + claim.op, claim.anchor, graded_norm(image, n),
                                  claim.rhs(f, n), 0.0);
      r.n = n;
      r.lmax = lmax;
      r.seed = seed;
      if (!have || relative_margin(r) < relative_margin(worst)) {
        worst = r;
        have = true;
      }
    }
  };
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) consider(HarmonicExpansion::basis({l, m}).resized(lmax));
  }
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    consider(random_test_function(rng, lmax));
  }
  return worst;
}

BoundReport continuity_criterion_check(const std::string& op, int trials, std::uint64_t seed,
                                       int lmax) {
  return continuity_criterion_check(registered_claim(op), trials, seed, lmax);
}

BoundReport bound_scan(const BoundFunction& bound, int max_n, int trials, std::uint64_t seed,
                       int lmax, int* failures) {
  BoundReport worst;
  bool have = false;
  int failed = 0;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const HarmonicExpansion f = random_test_function(rng, lmax);
    for (int n = 0; n <= max_n; ++n) {
      BoundReport r = bound(f, n);
      r.seed = seed;
      if (!r.pass) ++failed;
      if (!have || relative_margin(r) < relative_margin(worst)) {
        worst = r;
        have = true;
      }
    }
  }
  if (failures) *failures = failed;
  return worst;
}

double dtheta_fd_order(const HarmonicExpansion& f, const SpherePoint& p, double h) {
  const complex exact = dtheta_pointwise(f, p);
  auto fd = [&](double step) {
    const complex up = point_eval(f, SpherePoint::wrapped(p.theta() + step, p.phi()));
    const complex down = point_eval(f, SpherePoint::wrapped(p.theta() - step, p.phi()));
    return (up - down) / (2.0 * step);
  };
  const double e1 = std::abs(fd(h) - exact);
  const double e2 = std::abs(fd(0.5 * h) - exact);
  return std::log2(e1 / e2);
}

BoundReport exp_iphi_norm_scan(int trials, std::uint64_t seed, int lmax, int max_n) {
  const OperatorExpression op = exp_iphi_composite();
  std::vector<double> worst(static_cast<std::size_t>(max_n) + 1, 0.0);
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    HarmonicExpansion f = random_test_function(rng, lmax);
    for (int l = 1; l <= lmax; ++l) f.at(l, -1) = 0.0;
    const HarmonicExpansion image = op.apply(f);
    for (int n = 0; n <= max_n; ++n) {
      worst[static_cast<std::size_t>(n)] =
          std::max(worst[static_cast<std::size_t>(n)], graded_norm(image, n) / graded_norm(f, n + 2));
    }
  }
  BoundReport r;
  r.check = "exp_iphi_norm_ratio";
  r.anchor = "||e^{iPhi} f||_n <= C_n ||f||_{n+2}";
  r.informational = true;
  r.pass = true;
  r.seed = seed;
  r.lmax = lmax;
  r.n = max_n;
  r.columns = {"n", "C_n"};
  for (int n = 0; n <= max_n; ++n) r.table.push_back({double(n), worst[static_cast<std::size_t>(n)]});
  return r;
}

BoundReport exp_iphi_gap_scan(const HarmonicExpansion& f, const std::vector<int>& deltas,
                              int grid_lmax) {
  const HarmonicExpansion composite = exp_iphi_composite().apply(f);
  SampledField field = synthesize(f, make_grid(grid_lmax));
  for (std::size_t i = 0; i < field.grid.n_theta(); ++i) {
    for (std::size_t j = 0; j < field.grid.n_phi(); ++j) {
      field(i, j) *= std::polar(1.0, field.grid.phi[j]);
    }
  }
  const double total = hilbert_norm(f);
  BoundReport r;
  r.check = "exp_iphi_gap";
  r.anchor = "formal e^{iPhi} composite vs pointwise e^{i phi} multiplication";
  r.informational = true;
  r.pass = true;
  r.lmax = f.lmax();
  r.columns = {"delta", "tail_norm", "composite_distance"};
  for (int delta : deltas) {
    const HarmonicExpansion projected = analyze(field, f.lmax() + delta);
    const double kept = hilbert_norm(projected);
    const double tail = std::sqrt(std::max(0.0, total * total - kept * kept));
    r.table.push_back({double(delta), tail, hilbert_norm(composite - projected)});
  }
  return r;
}

BoundReport pde_convergence_scan(int lmax, double h) {
  BoundReport r;
  r.check = "pde_annihilation";
  r.anchor = "Laplace-Beltrami Y_l^m + l(l+1) Y_l^m = 0";
  r.columns = {"l", "m", "residual_h", "residual_h_half", "order"};
  r.lmax = lmax;
  double worst_residual = 0.0;
  bool orders_ok = true;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double r1 = pde_residual({l, m}, h);
      const double r2 = pde_residual({l, m}, 0.5 * h);
      double order = 0.0;
      if (l > 0) {
        order = std::log2(r1 / r2);
        if (!(std::abs(order - 2.0) <= 0.2)) orders_ok = false;
      } else if (r1 != 0.0 || r2 != 0.0) {
        orders_ok = false;
      }
      worst_residual = std::max(worst_residual, r1);
      r.table.push_back({double(l), double(m), r1, r2, order});
    }
  }
  r.lhs = worst_residual;
  r.rhs = 1e-4;
  r.margin = r.rhs - r.lhs;
  r.tol = 0.0;
  r.pass = r.margin >= 0.0 && orders_ok;
  return r;
}

}  // namespace sphrhs
