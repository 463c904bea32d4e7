#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sphrhs/legendre.hpp"
#include "sphrhs/rhs_diagnostics.hpp"
#include "sphrhs/structural_ops.hpp"
#include "sphrhs/suites.hpp"

using namespace sphrhs;

TEST_SUITE("rhs_diagnostics") {

TEST_CASE("trial streams are reproducible and distinct") {
  auto a = trial_rng(42, 3), b = trial_rng(42, 3), c = trial_rng(42, 4), d = trial_rng(43, 3);
  const auto va = a();
  CHECK(va == b());
  CHECK(va != c());
  CHECK(va != d());

  auto r1 = trial_rng(1, 0), r2 = trial_rng(1, 0);
  CHECK(max_abs_difference(random_test_function(r1, 6), random_test_function(r2, 6)) == 0.0);
  auto r3 = trial_rng(1, 0);
  for (const auto& p : random_points(r3, 200)) {
    CHECK(p.theta() >= 0.0);
    CHECK(p.theta() <= kPi);
  }
}

TEST_CASE("test functions decay at the requested rate") {
  auto rng = trial_rng(0, 0);
  const HarmonicExpansion f = random_test_function(rng, 40, 6.0);
  const DecayEstimate d = estimate_decay(f);
  CHECK(d.verdict == DecayVerdict::rapid);
  CHECK(d.exponent > 5.0);
}

TEST_CASE("point-functional constant against zeta values") {
  for (int p : {2, 3, 4}) {
    const double c = functional_constant(p);
    const double exact = oracle::functional_constant(p);
    // an upper bound, tight to the size of the integral tail
    CHECK(c >= exact);
    CHECK(c == doctest::Approx(exact).epsilon(p == 2 ? 1e-4 : 1e-12));
  }
  CHECK(functional_constant(3) <= 0.3089);
  CHECK(oracle::functional_constant(3) == doctest::Approx(0.30888).epsilon(1e-4));
  CHECK_THROWS_AS(functional_constant(1), std::invalid_argument);
}

TEST_CASE("point-functional bound is attained direction-wise by the kernel") {
  // |f(p)| <= C_p ||f||_p; the ratio never exceeds one even for the extremal
  // direction c_{l,m} ~ conj(e_{l,m}(p)) / (l+|m|+1)^{2p}
  const SpherePoint pole(0.0, 0.0);
  HarmonicExpansion f(60);
  for (int l = 0; l <= 60; ++l) {
    for (int m = -l; m <= l; ++m) {
      f.at(l, m) = std::conj(orthonormal_sh_eval({l, m}, pole)) / std::pow(l + std::abs(m) + 1.0, 6);
    }
  }
  const BoundReport r = bound_point_functional(f, pole, 3);
  CHECK(r.pass);
  CHECK(r.lhs / r.rhs > 0.5);
  CHECK(point_functional_check(20, 20, 42, 10).pass);
}

TEST_CASE("weak cos eigenrelation") {
  auto rng = trial_rng(6, 0);
  const HarmonicExpansion f = random_test_function(rng, 15, 1.0);
  for (const auto& p : random_points(rng, 20)) CHECK(weak_eigen_cos(f, p).pass);
}

TEST_CASE("continuity bounds on basis functions") {
  for (int l = 0; l <= 10; ++l) {
    for (int m = -l; m <= l; ++m) {
      const HarmonicExpansion e = HarmonicExpansion::basis({l, m});
      for (int n = 0; n <= 4; ++n) {
        CHECK(bound_Kplus(e, n).pass);
        CHECK(bound_L(e, n).pass);
        if (n <= 2) CHECK(bound_dtheta(e, n).pass);
      }
    }
  }
}

TEST_CASE("the cos(Theta) bound breaks from n = 2 on e_{0,0}") {
  // cos(theta) e_00 = e_10 / sqrt(3), so ||.||_n = 2^n / sqrt(3) against 2 ||e_00||_{n+1} = 2
  const HarmonicExpansion e = HarmonicExpansion::basis({0, 0});
  for (int n = 0; n <= 4; ++n) {
    const BoundReport r = bound_cos(e, n);
    CHECK(r.lhs == doctest::Approx(std::pow(2.0, n) / std::sqrt(3.0)));
    CHECK(r.rhs == doctest::Approx(2.0));
    CHECK(r.pass == (n < 2));
  }
}

TEST_CASE("registered claims") {
  for (const char* op : {"K+", "L", "M", "dThetaLit"}) {
    CAPTURE(op);
    CHECK(continuity_criterion_check(op, 50, 42, 8).pass);
  }
  CHECK_FALSE(continuity_criterion_check("cosTheta", 50, 42, 8).pass);
  CHECK_THROWS_AS(registered_claim("J+"), std::invalid_argument);
  const ContinuityClaim k = registered_claim("K+");
  CHECK(k.constant(3) == 8.0);
}

TEST_CASE("bound scan counts failures") {
  int failures = -1;
  const BoundReport r = bound_scan(bound_L, 4, 30, 42, 10, &failures);
  CHECK(failures == 0);
  CHECK(r.pass);
  const BoundReport c = bound_scan(bound_cos, 4, 30, 42, 10, &failures);
  CHECK(failures > 0);
  CHECK_FALSE(c.pass);
  CHECK(c.seed == 42);
}

TEST_CASE("e^{i Phi} graded norm scan is informational") {
  const BoundReport r = exp_iphi_norm_scan(10, 42, 8);
  CHECK(r.informational);
  REQUIRE(r.table.size() == 4);
  for (const auto& row : r.table) CHECK(std::isfinite(row[1]));
}

TEST_CASE("PDE convergence table") {
  const BoundReport r = pde_convergence_scan(4);
  CHECK(r.pass);
  CHECK(r.table.size() == 25);
  CHECK(r.columns.size() == 5);
}

}  // TEST_SUITE
