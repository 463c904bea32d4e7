#include <cmath>

#include "doctest.h"
#include "sphrhs/expression_parser.hpp"
#include "sphrhs/rhs_diagnostics.hpp"
#include "sphrhs/so32_algebra.hpp"

using namespace sphrhs;

namespace {

// Amplitude of generator `g` from e_{l,m} to e_{l',m'} on the Y basis, written out
// independently of so32_algebra.cpp.
double y_amplitude(const std::string& g, int l, int m) {
  auto r = [](double v) { return v > 0 ? std::sqrt(v) : 0.0; };
  if (g == "J+") return r((l - m) * (l + m + 1.0));
  if (g == "J-") return r((l + m) * (l - m + 1.0));
  if (g == "K+") return r((l + 1.0) * (l + 1.0) - m * m);
  if (g == "K-") return r(double(l * l - m * m));
  if (g == "R+") return r((l + m + 2.0) * (l + m + 1.0));
  if (g == "R-") return r((l + m) * (l + m - 1.0));
  if (g == "S+") return r((l - m + 2.0) * (l - m + 1.0));
  if (g == "S-") return r((l - m) * (l - m - 1.0));
  return NAN;
}

std::pair<int, int> shift(const std::string& g) {
  if (g == "J+") return {0, 1};
  if (g == "J-") return {0, -1};
  if (g == "K+") return {1, 0};
  if (g == "K-") return {-1, 0};
  if (g == "R+") return {1, 1};
  if (g == "R-") return {-1, -1};
  if (g == "S+") return {1, -1};
  return {-1, 1};
}

}  // namespace

TEST_SUITE("so32_algebra") {

TEST_CASE("generator names") {
  CHECK(generator_names().size() == 10);
  for (const auto& n : generator_names()) CHECK(generator(n).name() == n);
  CHECK_THROWS_AS(generator("Q"), std::invalid_argument);
  CHECK(generator("K+").band_width() == 1);
  CHECK(generator("J+").band_width() == 0);
}

TEST_CASE("ladder amplitudes with the basis ratio") {
  for (const char* g : {"J+", "J-", "K+", "K-", "R+", "R-", "S+", "S-"}) {
    const auto [dl, dm] = shift(g);
    for (int l = 0; l <= 6; ++l) {
      for (int m = -l; m <= l; ++m) {
        const HarmonicExpansion img = generator(g).apply(HarmonicExpansion::basis({l, m}));
        const int lt = l + dl, mt = m + dm;
        double want = 0.0;
        if (lt >= 0 && std::abs(mt) <= lt) {
          want = y_amplitude(g, l, m) * std::sqrt((2.0 * l + 1.0) / (2.0 * lt + 1.0));
        }
        CHECK(img.get(lt, mt).real() == doctest::Approx(want));
        // nothing else is touched
        CHECK(hilbert_norm(img) == doctest::Approx(std::abs(want)));
      }
    }
  }
}

TEST_CASE("worked examples") {
  const HarmonicExpansion k = generator("K+").apply(HarmonicExpansion::basis({0, 0}));
  CHECK(k(1, 0).real() == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(hilbert_norm(k) == doctest::Approx(std::sqrt(1.0 / 3.0)));

  const HarmonicExpansion e11 = HarmonicExpansion::basis({1, 1});
  const HarmonicExpansion c =
      commutator(OperatorExpression(generator("J+")), generator("J-")).apply(e11);
  CHECK(max_abs_difference(c, 2.0 * e11) < 1e-14);

  CHECK(generator("M").apply(HarmonicExpansion::basis({3, -2}))(3, -2).real() == -2.0);
  CHECK(generator("L").apply(HarmonicExpansion::basis({3, -2}))(3, -2).real() == 3.0);
  CHECK(shifted_cartan().apply(HarmonicExpansion::basis({3, -2}))(3, -2).real() == 3.5);
}

TEST_CASE("lowering and raising vanish at the edges of the triangle") {
  for (int l = 0; l <= 8; ++l) {
    CHECK(generator("J+").apply(HarmonicExpansion::basis({l, l})).is_zero());
    CHECK(generator("J-").apply(HarmonicExpansion::basis({l, -l})).is_zero());
    CHECK(generator("K-").apply(HarmonicExpansion::basis({l, l})).is_zero());
    CHECK(generator("K-").apply(HarmonicExpansion::basis({l, -l})).is_zero());
    CHECK(generator("R-").apply(HarmonicExpansion::basis({l, -l})).is_zero());
    CHECK(generator("S-").apply(HarmonicExpansion::basis({l, l})).is_zero());
    if (l > 0) {
      CHECK(generator("R-").apply(HarmonicExpansion::basis({l, -l + 1})).is_zero());
      CHECK(generator("S-").apply(HarmonicExpansion::basis({l, l - 1})).is_zero());
    }
  }
  CHECK(generator("K-").apply(HarmonicExpansion::basis({0, 0})).is_zero());
}

TEST_CASE("K+ and K- matrix elements differ by the basis ratio") {
  // both carry sqrt((l+1)^2 - m^2) on the Y basis; on e_{l,m} they pick up
  // reciprocal normalisation factors, so K- is not the adjoint of K+ here
  for (int l = 0; l <= 6; ++l) {
    for (int m = -l; m <= l; ++m) {
      const HarmonicExpansion up = generator("K+").apply(HarmonicExpansion::basis({l, m}));
      const HarmonicExpansion down = generator("K-").apply(HarmonicExpansion::basis({l + 1, m}));
      CHECK(up.get(l + 1, m).real() * (2.0 * l + 3.0) / (2.0 * l + 1.0) ==
            doctest::Approx(down.get(l, m).real()));
    }
  }
}

TEST_CASE("expression algebra is linear") {
  auto rng = trial_rng(5, 0);
  const HarmonicExpansion f = random_test_function(rng, 6, 0.0);
  const OperatorExpression a = generator("K+"), b = generator("R-");
  const complex s(0.5, -2.0);
  const HarmonicExpansion lhs = (s * a + b).apply(f);
  const HarmonicExpansion rhs = s * a.apply(f) + b.apply(f);
  CHECK(max_abs_difference(lhs, rhs) < 1e-13);
  CHECK(max_abs_difference((a * b).apply(f), a.apply(b.apply(f))) < 1e-13);
  CHECK(max_abs_difference(commutator(a, b).apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f))) < 1e-13);
  CHECK(max_abs_difference(OperatorExpression::identity().apply(f), f) == 0.0);
  CHECK_FALSE(commutator(a, b).describe().empty());
}

TEST_CASE("closure with the shifted Cartan element") {
  const ClosureResult c = closure_check(8);
  CHECK(c.entries.size() == 45);
  CHECK(c.report.pass);
  CHECK(c.max_residual < 1e-10);
  CHECK(c.coefficient("M", "J+", "J+") == doctest::Approx(1.0));
  CHECK(c.coefficient("M", "J-", "J-") == doctest::Approx(-1.0));
  CHECK(c.coefficient("L", "K+", "K+") == doctest::Approx(1.0));
  CHECK(c.coefficient("J+", "J-", "M") == doctest::Approx(2.0));
  CHECK(c.coefficient("K+", "K-", "L+1/2") == doctest::Approx(-2.0));
  // [R+,R-] = -4(L+1/2) - 4M, [S+,S-] = -4(L+1/2) + 4M
  CHECK(c.coefficient("R+", "R-", "L+1/2") == doctest::Approx(-4.0));
  CHECK(c.coefficient("R+", "R-", "M") == doctest::Approx(-4.0));
  CHECK(c.coefficient("S+", "S-", "M") == doctest::Approx(4.0));

  // with the plain L the three pairs above leave a constant behind
  CHECK(c.entry("K+", "K-").literal_residual == doctest::Approx(1.0));
  CHECK(c.entry("R+", "R-").literal_residual == doctest::Approx(2.0));
  CHECK(c.entry("S+", "S-").literal_residual == doctest::Approx(2.0));
  CHECK(c.entry("J+", "K+").literal_residual < 1e-10);
  CHECK_THROWS(c.entry("K-", "K+"));
  CHECK_THROWS(closure_check(3));
}

TEST_CASE("so(3) Casimir") {
  const BoundReport r = so3_casimir_check(12);
  CHECK(r.pass);
  CHECK(r.lhs < 1e-12);
}

TEST_CASE("parsed expressions agree with hand-built ones") {
  auto rng = trial_rng(9, 1);
  const HarmonicExpansion f = random_test_function(rng, 5, 0.0);
  const OperatorExpression jp = generator("J+"), jm = generator("J-"), m = generator("M");
  const OperatorExpression cas = 0.5 * (jp * jm + jm * jp) + m * m;
  CHECK(max_abs_difference(parse_operator_expression("0.5*(J+*J- + J-*J+) + M*M").apply(f),
                           cas.apply(f)) < 1e-13);
  CHECK(max_abs_difference(parse_operator_expression("[J+,J-]").apply(f), (2.0 * m).apply(f)) < 1e-13);
  CHECK(max_abs_difference(parse_operator_expression("-K+").apply(f),
                           (-1.0 * OperatorExpression(generator("K+"))).apply(f)) < 1e-14);
  CHECK(max_abs_difference(parse_operator_expression(" [ L , K+ ] - K+ ").apply(f), HarmonicExpansion(6)) < 1e-13);
  CHECK(max_abs_difference(parse_operator_expression("2e-1*cosTheta").apply(f),
                           (0.2 * named_operator("cosTheta")).apply(f)) < 1e-14);
}

TEST_CASE("parse errors") {
  for (const char* bad : {"Q?", "", "J", "K+*", "[J+,J-", "(M", "J+ J-", "2*", "sinExp", "M)", "1e"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_operator_expression(bad), ParseError);
  }
  try {
    parse_operator_expression("K+ * Zed");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

}  // TEST_SUITE
