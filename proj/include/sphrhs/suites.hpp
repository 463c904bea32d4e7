#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphrhs/report.hpp"
#include "sphrhs/so32_algebra.hpp"

namespace sphrhs {

// Checks that combine several modules. Each returns the worst case it saw.

/// max |analyze(synthesize(f)) - f| over `trials` random expansions of degree lmax.
BoundReport roundtrip_check(int lmax, int trials, std::uint64_t seed, double tol = 1e-12);

/// max relative |quadrature integral of |f|^2 - sum |c|^2| over `trials` expansions.
BoundReport parseval_check(int lmax, int trials, std::uint64_t seed, double tol = 1e-10);

/// Banded cosTheta, sinExp+ or sinExp- against multiplying samples by the same function.
BoundReport pointwise_equivalence_check(std::string_view op, int lmax, std::uint64_t seed,
                                        double tol = 1e-10);

/// Worst |order - 2| of central differences of d/dtheta against dtheta_pointwise, over
/// random expansions of degree lmax at random points. Passes within 0.2.
BoundReport dtheta_fd_check(int lmax, std::uint64_t seed, double h = 1e-3);

/// sh_product against quadrature of the pointwise product for all pairs l1, l2 <= lmax.
BoundReport product_law_check(int lmax, double tol = 1e-9);

/// <1 0 l 0 | l 0> = 0 and the matching zero in Y_1^m Y_l^m', exactly, for l <= lmax.
BoundReport selection_rule_check(int lmax);

/// invSinLit must throw DomainViolation on input with a nonzero m = 0 coefficient and
/// accept input without one.
BoundReport inv_sin_rejection_check();

/// Maximum deviation of the fitted coefficient vectors of [M,J+-], [L,K+-] and [J+,J-]
/// from +-J+-, +-K+- and 2M.
BoundReport structure_constant_check(const ClosureResult& closure, double tol = 1e-12);

/// With the unshifted L in the basis only [K+,K-], [R+,R-] and [S+,S-] leave a residual.
BoundReport literal_cartan_check(const ClosureResult& closure, double tol = 1e-10);

/// Worst point-functional bound over `functions` random expansions times `points` points.
BoundReport point_functional_check(int functions, int points, std::uint64_t seed, int lmax,
                                   int order = 3);

/// Worst weak cos(Theta) eigenrelation deviation over the same kind of sample.
BoundReport weak_eigen_check(int functions, int points, std::uint64_t seed, int lmax);

/// bound_scan wrapped with the number of violating trials as a one-row table.
BoundReport continuity_scan(std::string_view bound, int max_n, int trials, std::uint64_t seed,
                            int lmax);

struct SuiteConfig {
  std::string suite = "all";
  int lmax = 16;
  int trials = 100;
  std::uint64_t seed = 42;
  /// Replaces the default tolerance of identity checks. Inequalities keep tol 0.
  std::optional<double> tol;
  std::string out;

  /// Throws std::invalid_argument for an unknown suite, lmax < 1 or trials < 1.
  void validate() const;
};

const std::vector<std::string>& suite_names();

/// Runs the selected suite(s) sequentially. Reports are in a fixed order and carry
/// config.seed, so equal configs give equal output.
std::vector<BoundReport> run_suite(const SuiteConfig& config);

}  // namespace sphrhs
