#pragma once

namespace cwidth {

/// Triangle T_{alpha,beta} = {a,b >= 0 : a/alpha + b/beta <= 1} against the
/// disk segment A; containment of A is the line-distance condition
/// alpha*(beta + sqrt2) >= 2*sqrt(alpha^2 + beta^2).
struct TriangleBound {
  double alpha = 0.0;
  double beta = 0.0;
  double s_candidate = 0.0;  // sqrt(alpha^2 + beta^2)
  bool feasible = false;
};

TriangleBound triangle_feasible(double alpha, double beta);

/// Effective-radius upper bound (n+1)^{1/n} * sqrt(alpha^2+beta^2) / 2 for a
/// feasible pair; throws on an infeasible one.
double eq3_upper_bound(int n, double alpha, double beta);

/// P(x) = 8x^6 - 76x^4 + 54x^2 + 1 and its derivative.
double sextic_P(double x);
double sextic_P_derivative(double x);

/// The unique root of P in (0, 1): bisection from the sign change
/// P(0) = 1, P(1) = -13, then Newton polish.
double least_positive_root_P();

/// Positive root of 2 b^2 + sqrt2 b - 4 x^2 = 0, the stationarity condition
/// of f(beta) = sqrt(4x^2 - beta^2) (beta + sqrt2).
double critical_beta(double x);

/// Minimum of sqrt(alpha^2+beta^2) over feasible triangles.
struct SOptimum {
  double s = 0.0;
  double alpha_star = 0.0;
  double beta_star = 0.0;
  double x_star = 0.0;    // s / 2, least positive root of P
  double residual = 0.0;  // |P(x_star)|
};

/// Computes s along two independent routes, a golden-section constrained
/// minimizer and 2 * least_positive_root_P(), and requires agreement to 1e-9
/// (throws std::logic_error otherwise).
SOptimum minimize_s();

/// sqrt(3 + 2/(n+1)) - 1.
double schramm_lower_bound(int n);

/// Verification of k(n-k) * I_{T11}(k,n) * C(n,k) = 1 for all 2 <= n <= n_max,
/// 1 <= k <= n-1, with the T_{1,1} moment computed both from the log-beta
/// closed form and by 2D (iterated) quadrature. Throws if either route
/// deviates by more than 1e-9.
struct ClaimA1Report {
  int n_max = 0;
  double max_dev_closed_form = 0.0;
  double max_dev_quadrature = 0.0;
};

ClaimA1Report verify_claim_A1(int n_max);

}  // namespace cwidth
