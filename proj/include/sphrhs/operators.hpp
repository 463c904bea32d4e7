#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphrhs/harmonic_core.hpp"

namespace sphrhs {

/// Thrown when an operand lies outside an operator's domain.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One shift rule Y_l^m -> amplitude(l, m) Y_{l+dl}^{m+dm}, amplitudes on the Y basis.
struct BandRule {
  int dl = 0;
  int dm = 0;
  std::function<complex(int l, int m)> amplitude;
};

/// Banded linear map on coefficient space.
///
/// Rules are written on the Y_l^m basis. Stored coefficients refer to e_{l,m} =
/// sqrt(l+1/2) Y_l^m, so a term moving (l, m) to (l', m') picks up the factor
/// sqrt((2l+1)/(2l'+1)). Targets outside the triangle |m'| <= l' are dropped; every
/// rule is expected to vanish there.
class CoefficientOperator {
 public:
  CoefficientOperator(std::string name, std::vector<BandRule> rules,
                      std::function<void(const HarmonicExpansion&)> domain_check = {});

  const std::string& name() const { return name_; }
  const std::vector<BandRule>& rules() const { return rules_; }

  /// Largest upward shift in l (0 if no rule raises l).
  int band_width() const { return band_width_; }

  /// Throws DomainViolation if f is outside the operator's domain.
  void check_domain(const HarmonicExpansion& f) const;

  HarmonicExpansion apply(const HarmonicExpansion& f) const;

 private:
  std::string name_;
  std::vector<BandRule> rules_;
  std::function<void(const HarmonicExpansion&)> domain_check_;
  int band_width_ = 0;
};

/// Element of the enveloping algebra generated by CoefficientOperator leaves:
/// linear combinations, compositions and commutators.
class OperatorExpression {
 public:
  OperatorExpression(CoefficientOperator leaf);  // NOLINT(google-explicit-constructor)

  /// Identity map.
  static OperatorExpression identity();

  HarmonicExpansion apply(const HarmonicExpansion& f) const;

  /// Human-readable form of the tree.
  std::string describe() const;

  friend OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b);
  /// Composition: (a * b) f = a(b(f)).
  friend OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator*(complex alpha, const OperatorExpression& a);

  friend OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b);

  struct Node;

 private:
  explicit OperatorExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b);

inline HarmonicExpansion apply(const CoefficientOperator& op, const HarmonicExpansion& f) {
  return op.apply(f);
}
inline HarmonicExpansion apply(const OperatorExpression& op, const HarmonicExpansion& f) {
  return op.apply(f);
}

}  // namespace sphrhs
