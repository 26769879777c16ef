#pragma once

namespace honkit {

/// Regularized lower incomplete gamma P(s, x) = γ(s, x) / Γ(s), s > 0, x >= 0.
double regularized_gamma_p(double s, double x);

/// Regularized upper incomplete gamma Q(s, x) = 1 − P(s, x), evaluated
/// directly (not by subtraction) where the continued fraction applies.
double regularized_gamma_q(double s, double x);

/// Survival function of the χ² distribution with `dof` degrees of freedom.
/// dof = 0 is the point mass at zero.
double chi_square_survival(double x, double dof);

}  // namespace honkit
