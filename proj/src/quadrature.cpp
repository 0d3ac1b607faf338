#include "cwidth/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace cwidth {

GaussLegendreRule make_gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("make_gauss_legendre: order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess for the i-th positive root of P_order.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

const GaussLegendreRule& gauss_legendre_32() {
  static const GaussLegendreRule rule = make_gauss_legendre(32);
  return rule;
}

}  // namespace cwidth
