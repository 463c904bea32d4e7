#include "sphrhs/so32_algebra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphrhs {

namespace {

double root(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

BandRule rule(int dl, int dm, double (*amp)(int, int)) {
  return BandRule{dl, dm, [amp](int l, int m) { return complex{amp(l, m), 0.0}; }};
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"L",  "M",  "J+", "J-", "K+",
                                              "K-", "R+", "R-", "S+", "S-"};
  return names;
}

CoefficientOperator generator(std::string_view name) {
  if (name == "L") {
    return {"L", {rule(0, 0, [](int l, int) { return double(l); })}};
  }
  if (name == "M") {
    return {"M", {rule(0, 0, [](int, int m) { return double(m); })}};
  }
  if (name == "J+") {
    return {"J+", {rule(0, 1, [](int l, int m) { return root((l - m) * (l + m + 1.0)); })}};
  }
  if (name == "J-") {
    return {"J-", {rule(0, -1, [](int l, int m) { return root((l + m) * (l - m + 1.0)); })}};
  }
  if (name == "K+") {
    return {"K+", {rule(1, 0, [](int l, int m) { return root((l + 1.0) * (l + 1.0) - m * m); })}};
  }
  if (name == "K-") {
    return {"K-", {rule(-1, 0, [](int l, int m) { return root(double(l) * l - double(m) * m); })}};
  }
  if (name == "R+") {
    return {"R+", {rule(1, 1, [](int l, int m) { return root((l + m + 2.0) * (l + m + 1.0)); })}};
  }
  if (name == "R-") {
    return {"R-", {rule(-1, -1, [](int l, int m) { return root((l + m) * (l + m - 1.0)); })}};
  }
  if (name == "S+") {
    return {"S+", {rule(1, -1, [](int l, int m) { return root((l - m + 2.0) * (l - m + 1.0)); })}};
  }
  if (name == "S-") {
    return {"S-", {rule(-1, 1, [](int l, int m) { return root((l - m) * (l - m - 1.0)); })}};
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

CoefficientOperator shifted_cartan() {
  return {"L+1/2", {rule(0, 0, [](int l, int) { return l + 0.5; })}};
}

const ClosureEntry& ClosureResult::entry(std::string_view a, std::string_view b) const {
  for (const auto& e : entries) {
    if (e.a == a && e.b == b) return e;
  }
  throw std::invalid_argument("no closure entry for pair (" + std::string(a) + "," +
                              std::string(b) + ")");
}

double ClosureResult::coefficient(std::string_view a, std::string_view b,
                                  std::string_view name) const {
  const ClosureEntry& e = entry(a, b);
  for (std::size_t k = 0; k < basis_names.size(); ++k) {
    if (basis_names[k] == name) return e.coefficients[k];
  }
  throw std::invalid_argument("unknown basis element '" + std::string(name) + "'");
}

namespace {

// Stacks op(e_{l,m}) for every l <= lmax into one real vector (real parts then
// imaginary parts), each image padded to degree lmax + 2.
Eigen::VectorXd stacked_action(const OperatorExpression& op, int lmax) {
  const int out_lmax = lmax + 2;
  const std::size_t block = triangular_size(out_lmax);
  const std::size_t inputs = triangular_size(lmax);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * inputs * block));
  std::size_t k = 0;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m, ++k) {
      const HarmonicExpansion image = op.apply(HarmonicExpansion::basis({l, m})).resized(out_lmax);
      const auto coeffs = image.coefficients();
      for (std::size_t j = 0; j < block; ++j) {
        v(static_cast<Eigen::Index>(k * block + j)) = coeffs[j].real();
        v(static_cast<Eigen::Index>((inputs + k) * block + j)) = coeffs[j].imag();
      }
    }
  }
  return v;
}

}  // namespace

ClosureResult closure_check(int lmax, double tol) {
  if (lmax < 4) throw std::invalid_argument("closure_check requires lmax >= 4");
  const auto& names = generator_names();
  const auto n = static_cast<Eigen::Index>(names.size());

  std::vector<OperatorExpression> gens;
  for (const auto& name : names) gens.emplace_back(generator(name));

  const Eigen::VectorXd first = stacked_action(gens[0], lmax);
  Eigen::MatrixXd literal(first.size(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    literal.col(k) = k == 0 ? first : stacked_action(gens[static_cast<std::size_t>(k)], lmax);
  }
  Eigen::MatrixXd shifted = literal;
  shifted.col(0) = stacked_action(OperatorExpression(shifted_cartan()), lmax);

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_shifted(shifted);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_literal(literal);

  ClosureResult result;
  result.basis_names = names;
  result.basis_names[0] = "L+1/2";
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      const Eigen::VectorXd target = stacked_action(commutator(gens[a], gens[b]), lmax);
      const Eigen::VectorXd x_shifted = qr_shifted.solve(target);
      const Eigen::VectorXd x_literal = qr_literal.solve(target);

      ClosureEntry e;
      e.a = names[a];
      e.b = names[b];
      e.coefficients.assign(x_shifted.data(), x_shifted.data() + x_shifted.size());
      e.residual = (shifted * x_shifted - target).cwiseAbs().maxCoeff();
      e.literal_residual = (literal * x_literal - target).cwiseAbs().maxCoeff();
      result.max_residual = std::max(result.max_residual, e.residual);
      result.max_literal_residual = std::max(result.max_literal_residual, e.literal_residual);
      result.entries.push_back(std::move(e));
    }
  }

  result.report = make_report("so32_closure", "[X,Y] in span of the ten generators",
                              result.max_residual, 0.0, tol);
  result.report.lmax = lmax;
  return result;
}

BoundReport so3_casimir_check(int lmax, double tol) {
  const OperatorExpression jp = generator("J+");
  const OperatorExpression jm = generator("J-");
  const OperatorExpression m = generator("M");
  const OperatorExpression casimir = 0.5 * (jp * jm + jm * jp) + m * m;
  double worst = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    for (int mm = -l; mm <= l; ++mm) {
      const HarmonicExpansion e = HarmonicExpansion::basis({l, mm});
      const HarmonicExpansion image = casimir.apply(e);
      worst = std::max(worst, max_abs_difference(image, (l * (l + 1.0)) * e));
    }
  }
  BoundReport r = make_report("so3_casimir", "(J+J- + J-J+)/2 + M^2 = l(l+1)", worst, 0.0, tol);
  r.lmax = lmax;
  return r;
}

}  // namespace sphrhs
