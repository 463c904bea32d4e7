#pragma once

#include <vector>

#include "sphrhs/harmonic_core.hpp"
#include "sphrhs/report.hpp"

namespace sphrhs {

/// Associated Legendre function P_l^m(x) with the Condon-Shortley phase,
/// computed by the ascending-l recurrence from P_m^m. Returns 0 for m > l.
/// Throws std::invalid_argument for m < 0 or |x| > 1.
double assoc_legendre(int l, int m, double x);

/// P_l^m for any |m| <= l using P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
/// Returns 0 when |m| > l.
double assoc_legendre_signed(int l, int m, double x);

/// log((l-m)!/(l+m)!) via lgamma.
double log_factorial_ratio(int l, int m);

/// Table of the L2[-1,1]-normalised functions
///   Pbar_l^m(x) = sqrt((2l+1)/2 * (l-m)!/(l+m)!) P_l^m(x),  0 <= m <= l <= lmax,
/// filled by the standard normalised three-term recurrence.
class LegendreTable {
 public:
  LegendreTable(int lmax, double x);

  int lmax() const { return lmax_; }
  double x() const { return x_; }

  /// Pbar_l^m for 0 <= m <= l.
  double operator()(int l, int m) const { return values_[index(l, m)]; }

  /// Pbar extended to negative m with the factor (-1)^m, which is the theta part
  /// of e_{l,-m} = (-1)^m conj(e_{l,m}).
  double signed_value(int l, int m) const;

 private:
  static std::size_t index(int l, int m) {
    return static_cast<std::size_t>(l) * static_cast<std::size_t>(l + 1) / 2 +
           static_cast<std::size_t>(m);
  }
  int lmax_;
  double x_;
  std::vector<double> values_;
};

/// Y_l^m = sqrt((l-m)!/(2pi (l+m)!)) e^{i m phi} P_l^m(cos theta).
complex sh_eval(HarmonicIndex idx, const SpherePoint& p);

/// e_{l,m} = sqrt(l+1/2) Y_l^m.
complex orthonormal_sh_eval(HarmonicIndex idx, const SpherePoint& p);

/// Scans max |Y_l^m| over l <= lmax and an equispaced theta grid of grid_density
/// samples (poles included) against 1/sqrt(2pi).
BoundReport uniform_bound_check(int lmax, int grid_density, double tol = 1e-12);

}  // namespace sphrhs
