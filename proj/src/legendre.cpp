#include "sphrhs/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphrhs {

double assoc_legendre(int l, int m, double x) {
  if (m < 0) throw std::invalid_argument("assoc_legendre requires m >= 0");
  if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("assoc_legendre requires |x| <= 1");
  if (m > l) return 0.0;

  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= -(2.0 * k - 1.0) * s;
  if (l == m) return pmm;

  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;

  double pl = 0.0;
  for (int k = m + 2; k <= l; ++k) {
    pl = ((2.0 * k - 1.0) * x * pm1 - (k + m - 1.0) * pmm) / (k - m);
    pmm = pm1;
    pm1 = pl;
  }
  return pl;
}

double log_factorial_ratio(int l, int m) {
  return std::lgamma(l - m + 1.0) - std::lgamma(l + m + 1.0);
}

double assoc_legendre_signed(int l, int m, double x) {
  if (std::abs(m) > l) return 0.0;
  if (m >= 0) return assoc_legendre(l, m, x);
  const int a = -m;
  const double sign = (a % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_factorial_ratio(l, a)) * assoc_legendre(l, a, x);
}

LegendreTable::LegendreTable(int lmax, double x) : lmax_(lmax), x_(x) {
  if (lmax < 0) throw std::invalid_argument("LegendreTable requires lmax >= 0");
  if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("LegendreTable requires |x| <= 1");
  values_.assign(static_cast<std::size_t>(lmax + 1) * static_cast<std::size_t>(lmax + 2) / 2,
                 0.0);
  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));

  double pmm = std::sqrt(0.5);
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) pmm *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
    values_[index(m, m)] = pmm;
    if (m + 1 > lmax) break;
    double prev2 = pmm;
    double prev1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
    values_[index(m + 1, m)] = prev1;
    for (int l = m + 2; l <= lmax; ++l) {
      const double ll = static_cast<double>(l) * l;
      const double mm = static_cast<double>(m) * m;
      const double a = std::sqrt((4.0 * ll - 1.0) / (ll - mm));
      const double lm1 = l - 1.0;
      const double b = std::sqrt((lm1 * lm1 - mm) / (4.0 * lm1 * lm1 - 1.0));
      const double cur = a * (x * prev1 - b * prev2);
      values_[index(l, m)] = cur;
      prev2 = prev1;
      prev1 = cur;
    }
  }
}

double LegendreTable::signed_value(int l, int m) const {
  if (m >= 0) return values_[index(l, m)];
  const double v = values_[index(l, -m)];
  return (m % 2 == 0) ? v : -v;
}

namespace {

// theta-part of e_{l,m} times e^{i m phi} / sqrt(2 pi).
complex orthonormal_value(HarmonicIndex idx, const SpherePoint& p) {
  const double x = std::clamp(std::cos(p.theta()), -1.0, 1.0);
  const LegendreTable table(idx.l, x);
  const double theta_part = table.signed_value(idx.l, idx.m);
  return theta_part / std::sqrt(kTwoPi) * std::polar(1.0, idx.m * p.phi());
}

}  // namespace

complex orthonormal_sh_eval(HarmonicIndex idx, const SpherePoint& p) {
  return orthonormal_value(idx, p);
}

complex sh_eval(HarmonicIndex idx, const SpherePoint& p) {
  return orthonormal_value(idx, p) / std::sqrt(idx.l + 0.5);
}

BoundReport uniform_bound_check(int lmax, int grid_density, double tol) {
  if (lmax < 0) throw std::invalid_argument("uniform_bound_check requires lmax >= 0");
  if (grid_density < 2) throw std::invalid_argument("grid_density must be at least 2");
  double worst = 0.0;
  for (int k = 0; k < grid_density; ++k) {
    const double theta = kPi * k / (grid_density - 1);
    const LegendreTable table(lmax, std::clamp(std::cos(theta), -1.0, 1.0));
    for (int l = 0; l <= lmax; ++l) {
      const double scale = 1.0 / std::sqrt(kTwoPi * (l + 0.5));
      for (int m = 0; m <= l; ++m) worst = std::max(worst, std::abs(table(l, m)) * scale);
    }
  }
  BoundReport r = make_report("uniform_bound", "|Y_l^m(theta,phi)| <= 1/sqrt(2 pi)", worst,
                              1.0 / std::sqrt(kTwoPi), tol);
  r.lmax = lmax;
  return r;
}

}  // namespace sphrhs
