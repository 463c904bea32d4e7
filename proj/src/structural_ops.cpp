#include "sphrhs/structural_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sphrhs/legendre.hpp"
#include "sphrhs/sphere_transform.hpp"

namespace sphrhs {

namespace {

double root(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

BandRule real_rule(int dl, int dm, double (*amp)(int, int)) {
  return BandRule{dl, dm, [amp](int l, int m) { return complex{amp(l, m), 0.0}; }};
}

CoefficientOperator single_branch(const CoefficientOperator& op, int dm) {
  for (const auto& r : op.rules()) {
    if (r.dm == dm) return {op.name() + (dm > 0 ? "[m+1]" : "[m-1]"), {r}};
  }
  throw std::logic_error("operator has no branch with the requested dm");
}

}  // namespace

CoefficientOperator cos_theta_op() {
  return {"cosTheta",
          {real_rule(1, 0, [](int l, int m) { return root((l + m + 1.0) * (l - m + 1.0)) / (2 * l + 1); }),
           real_rule(-1, 0, [](int l, int m) { return root((l + m) * double(l - m)) / (2 * l + 1); })}};
}

CoefficientOperator sin_exp_op(int sign) {
  if (sign > 0) {
    return {"sinExp+",
            {real_rule(1, 1, [](int l, int m) { return -root((l + m + 1.0) * (l + m + 2.0)) / (2 * l + 1); }),
             real_rule(-1, 1, [](int l, int m) { return root((l - m) * (l - m - 1.0)) / (2 * l + 1); })}};
  }
  if (sign < 0) {
    return {"sinExp-",
            {real_rule(1, -1, [](int l, int m) { return root((l - m + 1.0) * (l - m + 2.0)) / (2 * l + 1); }),
             real_rule(-1, -1, [](int l, int m) { return -root((l + m) * (l + m - 1.0)) / (2 * l + 1); })}};
  }
  throw std::invalid_argument("sin_exp_op sign must be nonzero");
}

CoefficientOperator inv_sin_op_literal() {
  auto domain = [](const HarmonicExpansion& f) {
    for (int l = 0; l <= f.lmax(); ++l) {
      if (f(l, 0) != complex{}) {
        throw DomainViolation("invSinLit: coefficient (" + std::to_string(l) +
                              ",0) is nonzero; the -1/(2m) amplitude is undefined at m = 0");
      }
    }
  };
  return {"invSinLit",
          {real_rule(1, 1, [](int, int m) { return m == 0 ? 0.0 : -1.0 / (2.0 * m); }),
           real_rule(1, -1,
                     [](int l, int m) {
                       return m == 0 ? 0.0 : -(l - m + 1.0) * (l - m + 2.0) / (2.0 * m);
                     })},
          domain};
}

CoefficientOperator dtheta_op_literal() {
  return {"dThetaLit",
          {real_rule(0, -1, [](int l, int m) { return -0.5 * root((l + m) * (l - m + 1.0)); }),
           real_rule(0, 1, [](int l, int m) { return 0.5 * root((l - m) * (l + m + 1.0)); })}};
}

CoefficientOperator dphi_op() {
  return {"dPhi", {BandRule{0, 0, [](int, int m) { return complex{0.0, double(m)}; }}}};
}

OperatorExpression exp_iphi_composite() {
  return OperatorExpression(inv_sin_op_literal()) * OperatorExpression(sin_exp_op(+1));
}

complex dtheta_pointwise(const HarmonicExpansion& f, const SpherePoint& p) {
  const CoefficientOperator op = dtheta_op_literal();
  const HarmonicExpansion lowered = single_branch(op, -1).apply(f);
  const HarmonicExpansion raised = single_branch(op, +1).apply(f);
  return std::polar(1.0, p.phi()) * point_eval(lowered, p) +
         std::polar(1.0, -p.phi()) * point_eval(raised, p);
}

const std::vector<std::string>& structural_names() {
  static const std::vector<std::string> names{"cosTheta",  "sinExp+", "sinExp-", "invSinLit",
                                              "dThetaLit", "dPhi",    "expIPhi"};
  return names;
}

OperatorExpression structural_operator(std::string_view name) {
  if (name == "cosTheta") return cos_theta_op();
  if (name == "sinExp+") return sin_exp_op(+1);
  if (name == "sinExp-") return sin_exp_op(-1);
  if (name == "invSinLit") return inv_sin_op_literal();
  if (name == "dThetaLit") return dtheta_op_literal();
  if (name == "dPhi") return dphi_op();
  if (name == "expIPhi") return exp_iphi_composite();
  throw std::invalid_argument("unknown structural operator '" + std::string(name) + "'");
}

namespace {

double log_fact(int n) { return std::lgamma(n + 1.0); }

}  // namespace

double clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M) {
  if (l1 < 0 || l2 < 0 || L < 0) return 0.0;
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(M) > L) return 0.0;
  if (M != m1 + m2) return 0.0;
  if (L < std::abs(l1 - l2) || L > l1 + l2) return 0.0;

  const double log_pref =
      0.5 * (std::log(2.0 * L + 1.0) + log_fact(L + l1 - l2) + log_fact(L - l1 + l2) +
             log_fact(l1 + l2 - L) - log_fact(l1 + l2 + L + 1) + log_fact(L + M) +
             log_fact(L - M) + log_fact(l1 - m1) + log_fact(l1 + m1) + log_fact(l2 - m2) +
             log_fact(l2 + m2));

  const int kmin = std::max({0, l2 - L - m1, l1 - L + m2});
  const int kmax = std::min({l1 + l2 - L, l1 - m1, l2 + m2});
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double log_den = log_fact(k) + log_fact(l1 + l2 - L - k) + log_fact(l1 - m1 - k) +
                           log_fact(l2 + m2 - k) + log_fact(L - l2 + m1 + k) +
                           log_fact(L - l1 - m2 + k);
    const double term = std::exp(log_pref - log_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

HarmonicExpansion sh_product(HarmonicIndex a, HarmonicIndex b) {
  const int M = a.m + b.m;
  HarmonicExpansion out(a.l + b.l);
  const double scale = 1.0 / std::sqrt(kTwoPi);
  for (int L = std::abs(a.l - b.l); L <= a.l + b.l; ++L) {
    if (std::abs(M) > L) continue;
    const double c = clebsch_gordan(a.l, 0, b.l, 0, L, 0) * clebsch_gordan(a.l, a.m, b.l, b.m, L, M);
    // Y_L^M = e_{L,M} / sqrt(L + 1/2)
    out.at(L, M) = scale * c / std::sqrt(L + 0.5);
  }
  return out;
}

std::vector<SpherePoint> pde_sample_points(double h) {
  const double margin = std::max(10.0 * h, 0.35);
  std::vector<SpherePoint> pts;
  constexpr int n_theta = 7;
  constexpr int n_phi = 5;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = margin + (kPi - 2.0 * margin) * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      pts.push_back(SpherePoint::wrapped(theta, 0.4 + kTwoPi * j / n_phi));
    }
  }
  return pts;
}

double pde_residual(HarmonicIndex idx, double h) {
  if (!(h > 0.0 && h < 0.1)) throw std::invalid_argument("pde_residual requires 0 < h < 0.1");
  auto Y = [&](double theta, double phi) { return sh_eval(idx, SpherePoint::wrapped(theta, phi)); };
  const double eigen = idx.l * (idx.l + 1.0);
  double worst = 0.0;
  for (const SpherePoint& p : pde_sample_points(h)) {
    const double t = p.theta(), f = p.phi();
    const complex y0 = Y(t, f);
    const complex yp = Y(t + h, f), ym = Y(t - h, f);
    const double s = std::sin(t);
    const complex theta_part =
        (std::sin(t + 0.5 * h) * (yp - y0) - std::sin(t - 0.5 * h) * (y0 - ym)) / (h * h * s);
    const complex phi_part = (Y(t, f + h) - 2.0 * y0 + Y(t, f - h)) / (h * h * s * s);
    worst = std::max(worst, std::abs(theta_part + phi_part + eigen * y0));
  }
  return worst;
}

}  // namespace sphrhs
