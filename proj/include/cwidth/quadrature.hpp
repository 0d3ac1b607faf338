#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cwidth/specfun.hpp"

namespace cwidth {

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on the Legendre recurrence; nodes accurate to ~1e-15.
GaussLegendreRule make_gauss_legendre(int order);

/// Shared order-32 rule used by all panel integrations.
const GaussLegendreRule& gauss_legendre_32();

struct LogIntegral {
  double log_value = -std::numeric_limits<double>::infinity();
  double est_rel_error = 0.0;  // estimated relative error == abs error on the log
  int panels_used = 0;
};

namespace detail {

// log of the GL32 estimate of the panel integral; log_f may return -inf.
template <typename LogF>
double panel_log_value(LogF& log_f, const GaussLegendreRule& rule, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  LogSumAccumulator acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc.add(std::log(rule.weights[i] * h) + log_f(c + h * rule.nodes[i]));
  }
  return acc.value();
}

}  // namespace detail

/// Adaptive panel splitting with fixed-order Gauss-Legendre panels evaluated
/// in log space, for nonnegative integrands supplied as x -> ln f(x).
/// A panel is accepted when one more bisection changes its value by less than
/// rel_tol relatively, or when its contribution is below e^-46 of the largest
/// panel seen (for positive integrands panel-relative control is global).
template <typename LogF>
LogIntegral adaptive_log_integrate(LogF&& log_f, double lo, double hi,
                                   double rel_tol = 1e-10, int panel_budget = 10000) {
  if (!(lo < hi)) throw std::invalid_argument("adaptive_log_integrate: need lo < hi");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("adaptive_log_integrate: rel_tol must be > 0");
  const GaussLegendreRule& rule = gauss_legendre_32();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kNegligibleLog = 46.0;  // e^-46 ~ 1e-20 of the running scale

  struct Panel {
    double a, b, log_value;
  };
  std::vector<Panel> work;
  std::vector<std::pair<double, double>> accepted;  // (log_value, rel_error)
  work.push_back({lo, hi, detail::panel_log_value(log_f, rule, lo, hi)});
  double running_max = work.back().log_value;
  int panels = 1;

  while (!work.empty()) {
    const Panel p = work.back();
    work.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    if (!(p.a < mid && mid < p.b)) {
      accepted.emplace_back(p.log_value, 0.0);  // no representable midpoint
      continue;
    }
    panels += 2;
    if (panels > panel_budget) {
      throw std::runtime_error("adaptive_log_integrate: panel budget exhausted");
    }
    const double left = detail::panel_log_value(log_f, rule, p.a, mid);
    const double right = detail::panel_log_value(log_f, rule, mid, p.b);
    const double refined = log_add_exp(left, right);
    running_max = std::max(running_max, refined);

    double rel;
    if (refined == -kInf && p.log_value == -kInf) {
      rel = 0.0;
    } else if (refined == -kInf || p.log_value == -kInf) {
      rel = 1.0;
    } else {
      rel = std::abs(std::expm1(p.log_value - refined));
    }

    if (rel <= rel_tol || refined < running_max - kNegligibleLog) {
      accepted.emplace_back(refined, rel);
    } else {
      work.push_back({p.a, mid, left});
      work.push_back({mid, p.b, right});
    }
  }

  LogSumAccumulator total;
  for (const auto& [lv, _] : accepted) total.add(lv);
  const double log_total = total.value();
  double err = 0.0;
  if (std::isfinite(log_total)) {
    for (const auto& [lv, re] : accepted) err += re * std::exp(lv - log_total);
  }
  return {log_total, err, panels};
}

}  // namespace cwidth
