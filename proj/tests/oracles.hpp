#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library's numerical code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

inline long double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long double factorial(int n) {
  long double r = 1.0L;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// P_l^m(x) with Condon-Shortley phase from the explicit polynomial of P_l,
/// differentiated m times. Accurate for l up to about 20.
inline double legendre(int l, int m, double x) {
  if (m < 0) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return static_cast<double>(sign * factorial(l + m) / factorial(l - m) * legendre(l, -m, x));
  }
  if (m > l) return 0.0;
  // P_l(x) = 2^-l sum_k (-1)^k C(l,k) C(2l-2k,l) x^{l-2k}
  std::vector<long double> coeff(static_cast<std::size_t>(l) + 1, 0.0L);
  for (int k = 0; 2 * k <= l; ++k) {
    coeff[static_cast<std::size_t>(l - 2 * k)] =
        ((k % 2) ? -1.0L : 1.0L) * binomial(l, k) * binomial(2 * l - 2 * k, l) / std::pow(2.0L, l);
  }
  long double d = 0.0L;
  for (int p = m; p <= l; ++p) {
    d += coeff[static_cast<std::size_t>(p)] * factorial(p) / factorial(p - m) *
         std::pow(static_cast<long double>(x), p - m);
  }
  const long double s = std::pow(1.0L - static_cast<long double>(x) * x, 0.5L * m);
  return static_cast<double>(((m % 2) ? -1.0L : 1.0L) * s * d);
}

/// Y_l^m = sqrt((l-m)!/(2 pi (l+m)!)) e^{i m phi} P_l^m(cos theta).
inline std::complex<double> sh(int l, int m, double theta, double phi) {
  const double c = std::sqrt(static_cast<double>(factorial(l - m) / factorial(l + m)) / (2.0 * pi));
  return c * std::polar(1.0, m * phi) * legendre(l, m, std::cos(theta));
}

/// Gauss-Legendre rule on [-1, 1] by Golub-Welsch.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k - 1, k) = b;
    J(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    w[static_cast<std::size_t>(k)] = 2.0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
  }
  return {x, w};
}

/// Integral over the sphere (dOmega = d(cos theta) dphi) of g, exact for
/// trigonometric-polynomial data of degree below `degree`.
inline std::complex<double> sphere_integral(
    const std::function<std::complex<double>(double, double)>& g, int degree) {
  const auto [x, w] = gauss_legendre(degree / 2 + 2);
  const int nphi = degree + 2;
  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int j = 0; j < nphi; ++j) {
      total += w[i] * (2.0 * pi / nphi) * g(std::acos(x[i]), 2.0 * pi * j / nphi);
    }
  }
  return total;
}

/// Clebsch-Gordan coefficients from the coupled basis built by lowering from the
/// stretched state and Gram-Schmidt against higher total L (Condon-Shortley signs).
class CoupledBasis {
 public:
  CoupledBasis(int l1, int l2) : l1_(l1), l2_(l2) {
    for (int L = l1 + l2; L >= std::abs(l1 - l2); --L) {
      // top state |L, L> lies in the M = L sector, orthogonal to |L', L> for L' > L
      Vec top = Vec::Zero(dim());
      for (int m1 = -l1; m1 <= l1; ++m1) {
        const int m2 = L - m1;
        if (std::abs(m2) <= l2) top(index(m1, m2)) = 1.0 + 0.1 * (m1 + l1);
      }
      // two Gram-Schmidt sweeps; one loses digits when top is nearly in the span
      for (int sweep = 0; sweep < 2; ++sweep) {
        for (int Lp = l1 + l2; Lp > L; --Lp) {
          const Vec& v = states_.at({Lp, L});
          top -= v.dot(top) * v;
        }
        top.normalize();
      }
      // sign: <l1 l1; l2 L-l1 | L L> > 0
      if (top(index(l1, L - l1)) < 0.0) top = -top;
      states_[{L, L}] = top;
      Vec cur = top;
      for (int M = L; M > -L; --M) {
        cur = lower(cur) / std::sqrt(double(L + M) * (L - M + 1));
        states_[{L, M - 1}] = cur;
      }
    }
  }

  double cg(int m1, int m2, int L, int M) const {
    if (m1 + m2 != M || std::abs(m1) > l1_ || std::abs(m2) > l2_) return 0.0;
    auto it = states_.find({L, M});
    if (it == states_.end()) return 0.0;
    return it->second(index(m1, m2));
  }

 private:
  using Vec = Eigen::VectorXd;
  int dim() const { return (2 * l1_ + 1) * (2 * l2_ + 1); }
  int index(int m1, int m2) const { return (m1 + l1_) * (2 * l2_ + 1) + (m2 + l2_); }

  Vec lower(const Vec& v) const {
    Vec out = Vec::Zero(dim());
    for (int m1 = -l1_; m1 <= l1_; ++m1) {
      for (int m2 = -l2_; m2 <= l2_; ++m2) {
        const double c = v(index(m1, m2));
        if (c == 0.0) continue;
        if (m1 > -l1_) out(index(m1 - 1, m2)) += c * std::sqrt(double(l1_ + m1) * (l1_ - m1 + 1));
        if (m2 > -l2_) out(index(m1, m2 - 1)) += c * std::sqrt(double(l2_ + m2) * (l2_ - m2 + 1));
      }
    }
    return out;
  }

  int l1_, l2_;
  std::map<std::pair<int, int>, Vec> states_;
};

// zeta(n) for the odd arguments used below
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta5 = 1.0369277551433699263;
inline constexpr double zeta7 = 1.0083492773819228268;

inline double zeta_even(int n) {
  switch (n) {
    case 2: return pi * pi / 6.0;
    case 4: return std::pow(pi, 4) / 90.0;
    case 6: return std::pow(pi, 6) / 945.0;
    case 8: return std::pow(pi, 8) / 9450.0;
  }
  return NAN;
}

/// C_p = sqrt(sum_{k>=1} (2k-1)^2 k^{-2p} / (4 pi)) in closed form, p = 2, 3, 4.
inline double functional_constant(int p) {
  const double odd = p == 2 ? zeta3 : p == 3 ? zeta5 : zeta7;
  return std::sqrt((4.0 * zeta_even(2 * p - 2) - 4.0 * odd + zeta_even(2 * p)) / (4.0 * pi));
}

/// Central difference of g at t with step h.
inline std::complex<double> central_diff(const std::function<std::complex<double>(double)>& g,
                                         double t, double h) {
  return (g(t + h) - g(t - h)) / (2.0 * h);
}

}  // namespace oracle
