#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sphrhs/operators.hpp"

namespace sphrhs {

/// Multiplication by cos(theta); exact on band-limited expansions.
CoefficientOperator cos_theta_op();

/// Multiplication by sin(theta) e^{+i phi} (sign > 0) or sin(theta) e^{-i phi} (sign < 0).
CoefficientOperator sin_exp_op(int sign);

/// Formal 1/sin(Theta): Y_l^m -> -1/(2m) [Y_{l+1}^{m+1} + (l-m+1)(l-m+2) Y_{l+1}^{m-1}],
/// i.e. the Legendre-level identity read off as a shift on Y. Not pointwise 1/sin(theta).
/// Applying it to an expansion with any nonzero m = 0 coefficient throws DomainViolation.
CoefficientOperator inv_sin_op_literal();

/// Formal d/dtheta: Y_l^m -> -1/2 sqrt((l+m)(l-m+1)) Y_l^{m-1}
///                          + 1/2 sqrt((l-m)(l+m+1)) Y_l^{m+1}.
/// The pointwise derivative needs the phases e^{+i phi} and e^{-i phi} on the two
/// branches; see dtheta_pointwise.
CoefficientOperator dtheta_op_literal();

/// d/dphi, c_{l,m} -> i m c_{l,m}.
CoefficientOperator dphi_op();

/// Formal e^{i Phi} = inv_sin_op_literal() * sin_exp_op(+1).
OperatorExpression exp_iphi_composite();

/// d/dtheta f at p from the two branches of dtheta_op_literal() with their phases restored.
complex dtheta_pointwise(const HarmonicExpansion& f, const SpherePoint& p);

/// Names: cosTheta, sinExp+, sinExp-, invSinLit, dThetaLit, dPhi, expIPhi.
const std::vector<std::string>& structural_names();
OperatorExpression structural_operator(std::string_view name);

/// <l1 m1 l2 m2 | L M> by the Racah single-sum formula. Returns 0 outside the
/// selection rules.
double clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M);

/// Expansion (e basis) of the pointwise product Y_{l1}^{m1} Y_{l2}^{m2}.
HarmonicExpansion sh_product(HarmonicIndex a, HarmonicIndex b);

/// Points at which pde_residual samples the Laplace-Beltrami equation.
std::vector<SpherePoint> pde_sample_points(double h);

/// max over pde_sample_points(h) of
/// |(1/sin) d_theta(sin d_theta Y) + (1/sin^2) d_phi^2 Y + l(l+1) Y|
/// with second-order central differences of step h. Requires 0 < h < 0.1.
double pde_residual(HarmonicIndex idx, double h);

}  // namespace sphrhs
