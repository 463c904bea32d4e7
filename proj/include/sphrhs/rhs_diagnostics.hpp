#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sphrhs/harmonic_core.hpp"
#include "sphrhs/report.hpp"

namespace sphrhs {

/// Generator for trial `trial` of a run seeded with `seed`; independent of the
/// order in which trials are evaluated.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// c_{l,m} = (l+|m|+1)^{-decay} * z, z standard complex Gaussian.
HarmonicExpansion random_test_function(std::mt19937_64& rng, int lmax, double decay = 6.0);

std::vector<SpherePoint> random_points(std::mt19937_64& rng, std::size_t count);

// Continuity bounds. All are inequalities checked with zero tolerance.

/// ||K+ f||_n <= 2^n ||f||_{n+1}
BoundReport bound_Kplus(const HarmonicExpansion& f, int n);
/// ||L f||_n <= ||f||_{n+1}
BoundReport bound_L(const HarmonicExpansion& f, int n);
/// ||cos(Theta) f||_n <= 2 ||f||_{n+1}
BoundReport bound_cos(const HarmonicExpansion& f, int n);
/// ||D_Theta f||_n <= (||f||_{2n} + ||f||_{2n+2}) / 2
BoundReport bound_dtheta(const HarmonicExpansion& f, int n);

/// Upper bound on C_p with C_p^2 = sum_l (2l+1)^2 / (4 pi (l+1)^{2p}): the partial
/// sum up to lmax_tail plus an integral bound on the remainder. Requires p >= 2.
double functional_constant(int p, int lmax_tail = 100000);

/// |f(theta, phi)| <= C_order ||f||_order.
BoundReport bound_point_functional(const HarmonicExpansion& f, const SpherePoint& p, int order);

/// Weak form of the cos(Theta) eigenrelation: (cos(Theta) f)(p) = cos(theta_p) f(p).
/// lhs is the deviation, tolerance 1e-10 relative to the a-priori bound on |f(p)|.
BoundReport weak_eigen_cos(const HarmonicExpansion& f, const SpherePoint& p);

/// A claimed continuity estimate ||op f||_n <= c(n) * sum_k ||f||_{a_k n + b_k}, where
/// c(n) = base^n when exponential, else base.
struct ContinuityClaim {
  std::string op;
  std::string anchor;
  double base = 1.0;
  bool exponential = false;
  std::vector<std::pair<int, int>> norm_terms;
  int max_n = 4;

  double constant(int n) const;
  double rhs(const HarmonicExpansion& f, int n) const;
};

/// Registered claims for K+, L, M, cosTheta and dThetaLit. Throws
/// std::invalid_argument for other names.
ContinuityClaim registered_claim(const std::string& op);

/// Tries to falsify `claim` with every basis function e_{l,m}, l <= lmax, and
/// `trials` random test functions, for n = 0..claim.max_n. Reports the trial with
/// the smallest relative margin.
BoundReport continuity_criterion_check(const ContinuityClaim& claim, int trials,
                                       std::uint64_t seed, int lmax);
BoundReport continuity_criterion_check(const std::string& op, int trials, std::uint64_t seed,
                                       int lmax);

using BoundFunction = std::function<BoundReport(const HarmonicExpansion&, int)>;

/// Runs `bound` on `trials` random test functions for every n in [0, max_n] and
/// returns the worst report (smallest relative margin). `failures` receives the
/// number of violated trials.
BoundReport bound_scan(const BoundFunction& bound, int max_n, int trials, std::uint64_t seed,
                       int lmax, int* failures = nullptr);

/// Measured order of the central-difference error of d/dtheta f at p against
/// dtheta_pointwise, from steps h and h/2.
double dtheta_fd_order(const HarmonicExpansion& f, const SpherePoint& p, double h);

/// Informational scans of the formal e^{i Phi} composite.
/// Columns n, max ||e^{iPhi} f||_n / ||f||_{n+2}.
BoundReport exp_iphi_norm_scan(int trials, std::uint64_t seed, int lmax, int max_n = 3);
/// f must have no m = -1 component. Columns delta, tail norm of e^{i phi} f beyond lmax+delta, distance between the
/// composite image and the projection of e^{i phi} f onto degree lmax+delta.
BoundReport exp_iphi_gap_scan(const HarmonicExpansion& f, const std::vector<int>& deltas,
                              int grid_lmax);

/// Residual of the Laplace-Beltrami equation for all (l, m), l <= lmax, at h and h/2.
/// Columns l, m, residual(h), residual(h/2), order.
BoundReport pde_convergence_scan(int lmax, double h = 1e-3);

}  // namespace sphrhs
