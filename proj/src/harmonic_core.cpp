#include "sphrhs/harmonic_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sphrhs {

HarmonicIndex::HarmonicIndex(int l_, int m_) : l(l_), m(m_) {
  if (l < 0 || std::abs(m) > l) {
    throw std::invalid_argument("harmonic index requires 0 <= |m| <= l, got (" +
                                std::to_string(l) + "," + std::to_string(m) + ")");
  }
}

SpherePoint::SpherePoint(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::out_of_range("theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::out_of_range("phi must lie in [0, 2pi)");
  }
}

SpherePoint SpherePoint::wrapped(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::out_of_range("theta must lie in [0, pi]");
  }
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return SpherePoint(theta, p, true);
}

HarmonicExpansion::HarmonicExpansion(int lmax) : lmax_(lmax) {
  if (lmax < 0) throw std::invalid_argument("lmax must be non-negative");
  coefficients_.assign(triangular_size(lmax), complex{});
}

HarmonicExpansion::HarmonicExpansion(int lmax, std::vector<complex> coefficients)
    : lmax_(lmax), coefficients_(std::move(coefficients)) {
  if (lmax < 0) throw std::invalid_argument("lmax must be non-negative");
  if (coefficients_.size() != triangular_size(lmax)) {
    throw std::invalid_argument("expected (lmax+1)^2 coefficients");
  }
  for (const auto& c : coefficients_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("coefficients must be finite");
    }
  }
}

HarmonicExpansion HarmonicExpansion::basis(HarmonicIndex idx, complex value) {
  HarmonicExpansion f(idx.l);
  f.at(idx.l, idx.m) = value;
  return f;
}

void HarmonicExpansion::check_index(int l, int m) const {
  if (l < 0 || l > lmax_ || std::abs(m) > l) {
    throw std::out_of_range("coefficient (" + std::to_string(l) + "," + std::to_string(m) +
                            ") outside expansion of degree " + std::to_string(lmax_));
  }
}

complex HarmonicExpansion::operator()(int l, int m) const {
  check_index(l, m);
  return coefficients_[triangular_offset(l, m)];
}

complex& HarmonicExpansion::at(int l, int m) {
  check_index(l, m);
  return coefficients_[triangular_offset(l, m)];
}

complex HarmonicExpansion::get(int l, int m) const {
  if (l < 0 || l > lmax_ || std::abs(m) > l) return {};
  return coefficients_[triangular_offset(l, m)];
}

HarmonicExpansion HarmonicExpansion::resized(int lmax) const {
  HarmonicExpansion out(lmax);
  const int common = std::min(lmax, lmax_);
  std::copy_n(coefficients_.begin(), triangular_size(common), out.coefficients_.begin());
  return out;
}

bool HarmonicExpansion::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const complex& c) { return c == complex{}; });
}

HarmonicExpansion& HarmonicExpansion::operator+=(const HarmonicExpansion& other) {
  if (other.lmax_ > lmax_) *this = resized(other.lmax_);
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  return *this;
}

HarmonicExpansion& HarmonicExpansion::operator-=(const HarmonicExpansion& other) {
  if (other.lmax_ > lmax_) *this = resized(other.lmax_);
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  return *this;
}

HarmonicExpansion& HarmonicExpansion::operator*=(complex alpha) {
  for (auto& c : coefficients_) c *= alpha;
  return *this;
}

double max_abs_difference(const HarmonicExpansion& a, const HarmonicExpansion& b) {
  const int lmax = std::max(a.lmax(), b.lmax());
  double worst = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      worst = std::max(worst, std::abs(a.get(l, m) - b.get(l, m)));
    }
  }
  return worst;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double graded_norm(const HarmonicExpansion& f, int n) {
  if (n < 0) throw std::invalid_argument("graded norm index must be non-negative");
  const double largest_weight = 2.0 * f.lmax() + 1.0;
  if (2.0 * n * std::log(largest_weight) >= std::log(std::numeric_limits<double>::max())) {
    throw std::range_error("graded norm weight (2*lmax+1)^(2n) overflows for n = " +
                           std::to_string(n));
  }
  std::vector<double> terms;
  terms.reserve(f.size());
  for (int l = 0; l <= f.lmax(); ++l) {
    for (int m = -l; m <= l; ++m) {
      const double w = std::pow(static_cast<double>(l + std::abs(m) + 1), 2 * n);
      terms.push_back(w * std::norm(f(l, m)));
    }
  }
  return std::sqrt(pairwise_sum(terms));
}

double hilbert_norm(const HarmonicExpansion& f) { return graded_norm(f, 0); }

NormProfile norm_profile(const HarmonicExpansion& f, int N) {
  if (N < 0) throw std::invalid_argument("norm profile length must be non-negative");
  NormProfile profile;
  profile.N = N;
  profile.values.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) profile.values.push_back(graded_norm(f, n));
  return profile;
}

std::string to_string(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::rapid:
      return "rapid-decay";
    case DecayVerdict::slow:
      return "slow-decay";
    case DecayVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DecayEstimate estimate_decay(const HarmonicExpansion& f, const DecayConfig& config) {
  if (f.lmax() < 4) throw std::invalid_argument("decay estimate needs lmax >= 4");

  std::vector<double> xs, ys;
  for (int l = 0; l <= f.lmax(); ++l) {
    double amax = 0.0;
    for (int m = -l; m <= l; ++m) amax = std::max(amax, std::abs(f(l, m)));
    if (amax > 0.0) {
      xs.push_back(std::log(l + 1.0));
      ys.push_back(std::log(amax));
    }
  }

  DecayEstimate est;
  const bool has_tail = !xs.empty() && xs.back() > 0.0;
  if (xs.size() < 2 || !has_tail) return est;

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }
  est.exponent = -slope;
  est.residual = std::sqrt(ss / n);
  if (est.residual > config.max_residual) {
    est.verdict = DecayVerdict::inconclusive;
  } else {
    est.verdict = est.exponent >= config.rapid_exponent ? DecayVerdict::rapid : DecayVerdict::slow;
  }
  return est;
}

}  // namespace sphrhs
