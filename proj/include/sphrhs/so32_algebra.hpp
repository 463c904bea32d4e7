#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sphrhs/operators.hpp"
#include "sphrhs/report.hpp"

namespace sphrhs {

/// Names accepted by generator(): L, M, J+, J-, K+, K-, R+, R-, S+, S-.
const std::vector<std::string>& generator_names();

/// One of the ten so(3,2) generators as a banded operator. L and M are the
/// diagonal multipliers l and m. Throws std::invalid_argument for unknown names.
CoefficientOperator generator(std::string_view name);

/// L + 1/2, the Cartan element under which the ladder operators close.
CoefficientOperator shifted_cartan();

struct ClosureEntry {
  std::string a, b;
  /// [a,b] expanded over closure_basis_names(); L is replaced by L + 1/2.
  std::vector<double> coefficients;
  double residual = 0.0;
  /// Residual of the same fit with the unshifted diagonal L in the basis.
  double literal_residual = 0.0;
};

struct ClosureResult {
  std::vector<std::string> basis_names;
  std::vector<ClosureEntry> entries;
  double max_residual = 0.0;
  double max_literal_residual = 0.0;
  BoundReport report;

  const ClosureEntry& entry(std::string_view a, std::string_view b) const;
  /// Coefficient of basis element `name` in [a,b].
  double coefficient(std::string_view a, std::string_view b, std::string_view name) const;
};

/// Applies every commutator [X,Y] of the ten generators to all e_{l,m}, l <= lmax,
/// and finds the least-squares combination of generator actions reproducing it.
/// Throws std::invalid_argument for lmax < 4.
ClosureResult closure_check(int lmax, double tol = 1e-10);

/// max |((J+J- + J-J+)/2 + M^2) e_{l,m} - l(l+1) e_{l,m}| over l <= lmax.
BoundReport so3_casimir_check(int lmax, double tol = 1e-12);

}  // namespace sphrhs
