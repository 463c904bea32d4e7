#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphrhs {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Degree/order pair with |m| <= l.
struct HarmonicIndex {
  int l = 0;
  int m = 0;

  HarmonicIndex() = default;
  HarmonicIndex(int l_, int m_);

  friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// A point on the unit sphere, theta in [0, pi], phi in [0, 2pi).
class SpherePoint {
 public:
  SpherePoint(double theta, double phi);

  /// Builds a point after reducing phi modulo 2pi. Theta is still checked.
  static SpherePoint wrapped(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  SpherePoint(double theta, double phi, bool /*unchecked*/) : theta_(theta), phi_(phi) {}
  double theta_;
  double phi_;
};

/// Number of (l, m) pairs with l <= lmax.
constexpr std::size_t triangular_size(int lmax) {
  return static_cast<std::size_t>(lmax + 1) * static_cast<std::size_t>(lmax + 1);
}

/// Flat position of (l, m) in the dense triangular layout (l-major, then l+m).
constexpr std::size_t triangular_offset(int l, int m) {
  return static_cast<std::size_t>(l) * static_cast<std::size_t>(l) +
         static_cast<std::size_t>(l + m);
}

/// Truncated expansion f = sum c_{l,m} e_{l,m} in the orthonormal basis
/// e_{l,m} = sqrt(l+1/2) Y_l^m. Stored densely for every |m| <= l <= lmax.
class HarmonicExpansion {
 public:
  static constexpr const char* kBasisTag = "sqrt(l+1/2)Y";

  explicit HarmonicExpansion(int lmax = 0);
  HarmonicExpansion(int lmax, std::vector<complex> coefficients);

  static HarmonicExpansion basis(HarmonicIndex idx, complex value = 1.0);

  int lmax() const { return lmax_; }
  std::size_t size() const { return coefficients_.size(); }

  complex operator()(int l, int m) const;
  complex& at(int l, int m);
  complex get(int l, int m) const;

  std::span<const complex> coefficients() const { return coefficients_; }

  /// Copy truncated or zero-padded to the given degree.
  HarmonicExpansion resized(int lmax) const;

  bool is_zero() const;

  HarmonicExpansion& operator+=(const HarmonicExpansion& other);
  HarmonicExpansion& operator-=(const HarmonicExpansion& other);
  HarmonicExpansion& operator*=(complex alpha);

  friend HarmonicExpansion operator+(HarmonicExpansion a, const HarmonicExpansion& b) {
    return a += b;
  }
  friend HarmonicExpansion operator-(HarmonicExpansion a, const HarmonicExpansion& b) {
    return a -= b;
  }
  friend HarmonicExpansion operator*(complex alpha, HarmonicExpansion a) { return a *= alpha; }

 private:
  void check_index(int l, int m) const;

  int lmax_;
  std::vector<complex> coefficients_;
};

/// Largest coefficient-wise modulus of a - b, both zero-padded to a common degree.
double max_abs_difference(const HarmonicExpansion& a, const HarmonicExpansion& b);

/// Sum of a sequence by recursive halving.
double pairwise_sum(std::span<const double> values);

/// ||f||_n^2 = sum (l+|m|+1)^{2n} |c_{l,m}|^2. Throws std::invalid_argument for n < 0
/// and std::range_error when the largest weight is not representable.
double graded_norm(const HarmonicExpansion& f, int n);

double hilbert_norm(const HarmonicExpansion& f);

struct NormProfile {
  std::vector<double> values;
  int N = 0;
};

NormProfile norm_profile(const HarmonicExpansion& f, int N);

enum class DecayVerdict { rapid, slow, inconclusive };

std::string to_string(DecayVerdict v);

struct DecayEstimate {
  double exponent = 0.0;
  double residual = 0.0;
  DecayVerdict verdict = DecayVerdict::inconclusive;
};

struct DecayConfig {
  double rapid_exponent = 4.0;
  /// RMS residual of the log-log fit above which the verdict is inconclusive.
  double max_residual = 0.5;
};

/// Fits log max_{|m|<=l} |c_{l,m}| ~ log C - s log(l+1) by least squares.
DecayEstimate estimate_decay(const HarmonicExpansion& f, const DecayConfig& config = {});

}  // namespace sphrhs
