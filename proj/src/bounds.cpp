#include "cwidth/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cwidth/quadrature.hpp"
#include "cwidth/specfun.hpp"

namespace cwidth {

namespace {

constexpr double kFeasibilityTol = 1e-12;

// alpha on the active constraint alpha*(beta+sqrt2) = 2*sqrt(alpha^2+beta^2),
// valid for beta > 2 - sqrt2.
double alpha_on_constraint(double beta) {
  const double t = beta + std::numbers::sqrt2;
  return 2.0 * beta / std::sqrt(t * t - 4.0);
}

double s_of_beta(double beta) {
  return std::hypot(alpha_on_constraint(beta), beta);
}

}  // namespace

TriangleBound triangle_feasible(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("triangle_feasible: alpha and beta must be positive");
  }
  TriangleBound tb;
  tb.alpha = alpha;
  tb.beta = beta;
  tb.s_candidate = std::hypot(alpha, beta);
  tb.feasible = alpha * (beta + std::numbers::sqrt2) >= 2.0 * tb.s_candidate - kFeasibilityTol;
  return tb;
}

double eq3_upper_bound(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("eq3_upper_bound: dimension must be >= 1");
  const TriangleBound tb = triangle_feasible(alpha, beta);
  if (!tb.feasible) {
    throw std::invalid_argument("eq3_upper_bound: (alpha, beta) does not contain A");
  }
  return 0.5 * std::pow(n + 1.0, 1.0 / n) * tb.s_candidate;
}

double sextic_P(double x) {
  const double y = x * x;
  // Horner in y = x^2 with fused multiply-adds.
  return std::fma(std::fma(std::fma(8.0, y, -76.0), y, 54.0), y, 1.0);
}

double sextic_P_derivative(double x) {
  const double y = x * x;
  return x * std::fma(std::fma(48.0, y, -304.0), y, 108.0);
}

double least_positive_root_P() {
  // Descartes precondition: coefficients of P in y = x^2 are (8, -76, 54, 1),
  // exactly two sign changes, so at most two positive roots in y.
  {
    const double coeff[4] = {8.0, -76.0, 54.0, 1.0};
    int changes = 0;
    for (int i = 0; i < 3; ++i) {
      if (coeff[i] * coeff[i + 1] < 0.0) ++changes;
    }
    if (changes != 2) throw std::logic_error("least_positive_root_P: sign-change count");
  }
  double lo = 0.0, hi = 1.0;
  if (!(sextic_P(lo) > 0.0 && sextic_P(hi) < 0.0)) {
    throw std::logic_error("least_positive_root_P: bracket lost");
  }
  for (int i = 0; i < 80 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sextic_P(mid) > 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 5; ++i) {
    const double p = sextic_P(x);
    if (std::abs(p) < 1e-14) break;
    x -= p / sextic_P_derivative(x);
  }
  return x;
}

double critical_beta(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("critical_beta: x must be positive");
  return -0.5 / std::numbers::sqrt2 + std::sqrt(0.125 + 2.0 * x * x);
}

SOptimum minimize_s() {
  // Route (i), numeric: on the active constraint, minimize s(beta) by a grid
  // scan plus golden-section refinement over beta in (2 - sqrt2, 2].
  const double beta_lo = (2.0 - std::numbers::sqrt2) * (1.0 + 1e-9);
  const double beta_hi = 2.0;
  constexpr int kGrid = 2000;
  int best = 1;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kGrid; ++i) {
    const double beta = beta_lo + (beta_hi - beta_lo) * i / kGrid;
    const double v = s_of_beta(beta);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = beta_lo + (beta_hi - beta_lo) * (best - 1) / kGrid;
  double b = beta_lo + (beta_hi - beta_lo) * (best + 1) / kGrid;
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = s_of_beta(c), fd = s_of_beta(d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = s_of_beta(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = s_of_beta(d);
    }
  }
  const double s_numeric = s_of_beta(0.5 * (a + b));

  // Route (ii), algebraic: s = 2 * (least positive root of P).
  const double x_star = least_positive_root_P();
  const double s_algebraic = 2.0 * x_star;

  if (std::abs(s_numeric - s_algebraic) > 1e-9) {
    throw std::logic_error("minimize_s: numeric and algebraic routes disagree");
  }

  SOptimum opt;
  opt.x_star = x_star;
  opt.s = s_algebraic;
  opt.residual = std::abs(sextic_P(x_star));
  // Witnesses: beta* from the stationarity quadratic at x*, alpha* from the
  // active constraint.
  opt.beta_star = critical_beta(x_star);
  opt.alpha_star = alpha_on_constraint(opt.beta_star);
  return opt;
}

double schramm_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("schramm_lower_bound: dimension must be >= 1");
  return std::sqrt(3.0 + 2.0 / (n + 1.0)) - 1.0;
}

ClaimA1Report verify_claim_A1(int n_max) {
  if (n_max < 2) throw std::invalid_argument("verify_claim_A1: n_max must be >= 2");
  ClaimA1Report report;
  report.n_max = n_max;
  const GaussLegendreRule& rule = gauss_legendre_32();
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const double log_C = log_binomial(n, k);
      const double log_k = std::log(static_cast<double>(k));
      const double log_nk = std::log(static_cast<double>(n - k));

      // Closed form: I = B(k, n-k+1) / (n-k) via log-gamma.
      const double log_I_closed =
          log_gamma(k) + log_gamma(n - k + 1.0) - log_gamma(n + 1.0) - log_nk;
      const double dev_closed = std::abs(std::expm1(log_k + log_nk + log_I_closed + log_C));
      report.max_dev_closed_form = std::max(report.max_dev_closed_form, dev_closed);

      // Iterated quadrature: inner GL32 in b (exact for these polynomial
      // degrees), outer adaptive log-space panels in a.
      auto log_f = [&, k, n](double a) {
        const double hw = 0.5 * (1.0 - a);
        double inner = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          inner += rule.weights[i] * hw * std::pow(hw * (1.0 + rule.nodes[i]), n - k - 1);
        }
        double lf = std::log(inner);
        if (k > 1) lf += (k - 1) * std::log(a);  // avoids 0 * log(0) at a = 0
        return lf;
      };
      const double log_I_quad = adaptive_log_integrate(log_f, 0.0, 1.0, 1e-12).log_value;
      const double dev_quad = std::abs(std::expm1(log_k + log_nk + log_I_quad + log_C));
      report.max_dev_quadrature = std::max(report.max_dev_quadrature, dev_quad);
    }
  }
  if (report.max_dev_closed_form > 1e-9 || report.max_dev_quadrature > 1e-9) {
    throw std::runtime_error("verify_claim_A1: identity deviation exceeds 1e-9");
  }
  return report;
}

}  // namespace cwidth
