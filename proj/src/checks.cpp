#include "cwidth/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cwidth/body.hpp"
#include "cwidth/bounds.hpp"
#include "cwidth/rng.hpp"
#include "cwidth/specfun.hpp"
#include "cwidth/volume.hpp"

namespace cwidth {

namespace {

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

Eigen::VectorXd random_unit(int n, std::mt19937_64& eng,
                            std::normal_distribution<double>& gauss) {
  Eigen::VectorXd g(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) g[i] = gauss(eng);
    norm = g.norm();
  } while (norm == 0.0);
  return g / norm;
}

CheckResult check_specfun() {
  double worst = 0.0;
  // Low-dimensional ball volumes against their closed forms.
  worst = std::max(worst, std::abs(std::exp(log_unit_ball_volume(1)) - 2.0) / 2.0);
  worst = std::max(worst,
                   std::abs(std::exp(log_unit_ball_volume(2)) - std::numbers::pi) /
                       std::numbers::pi);
  const double omega3 = 4.0 * std::numbers::pi / 3.0;
  worst = std::max(worst, std::abs(std::exp(log_unit_ball_volume(3)) - omega3) / omega3);
  bool pass = worst < 1e-14;

  // Pascal recurrence, exact symmetry.
  for (int n = 2; n <= 60 && pass; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      if (log_binomial(n, k) != log_binomial(n, n - k)) pass = false;
      const double c = std::exp(log_binomial(n, k));
      const double dev =
          std::abs(c - std::exp(log_binomial(n - 1, k)) - std::exp(log_binomial(n - 1, k - 1))) / c;
      if (dev > 1e-12) pass = false;
    }
  }

  // Omega_n / Omega_{n-2} = 2 pi / n, tolerance scaled by the log magnitudes.
  for (int n = 3; n <= 10000; n = n < 40 ? n + 1 : n * 7 / 4) {
    const double lhs = log_unit_ball_volume(n) - log_unit_ball_volume(n - 2);
    const double rhs = std::log(2.0 * std::numbers::pi) - std::log(static_cast<double>(n));
    const double scale = std::max(1.0, std::abs(log_unit_ball_volume(n)));
    if (std::abs(lhs - rhs) > 1e-13 * scale) pass = false;
  }
  return {"specfun invariants", pass, fmt("max low-dim volume deviation %.3g", worst)};
}

CheckResult check_oracle_equivalence(long long samples, std::uint64_t seed) {
  long long disagreements = 0;
  long long tested = 0;
  for (int n : {2, 3, 5, 10}) {
    const BodySpec spec(n);
    std::mt19937_64 eng = make_engine(seed, 100 + n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double radius_scale = 1.05 * std::numbers::sqrt2;
    for (long long i = 0; i < samples; ++i) {
      Eigen::VectorXd v = random_unit(n, eng, gauss);
      v *= radius_scale * std::exp(std::log(unif(eng)) / n);
      const bool fast = contains(spec, v);
      const bool defn = contains_definitional(spec, v);
      ++tested;
      if (fast != defn) {
        // Tolerated only inside a 1e-9 boundary band.
        const auto [p, q] = detail::part_norms(v);
        const double m1 = 4.0 - (p * p + (q + std::numbers::sqrt2) * (q + std::numbers::sqrt2));
        const double r = p + 2.0 - std::numbers::sqrt2;
        const double m2 = 4.0 - (r * r + q * q);
        if (std::min(std::abs(m1), std::abs(m2)) > 1e-9) ++disagreements;
      }
    }
  }
  return {"membership oracle equivalence", disagreements == 0,
          fmt("%.0f disagreements outside the boundary band over %.0f points",
              static_cast<double>(disagreements), static_cast<double>(tested))};
}

CheckResult check_width(long long samples) {
  double worst = 0.0;
  for (int n : {2, 3, 10, 100}) {
    const WidthCheckReport rep = width_check(n, samples, 0);
    worst = std::max(worst, rep.max_abs_deviation);
  }
  return {"constant width sweep", worst < 1e-9, fmt("max |width - 2| = %.3g", worst)};
}

CheckResult check_claim_a1() {
  try {
    const ClaimA1Report rep = verify_claim_A1(30);
    const double worst = std::max(rep.max_dev_closed_form, rep.max_dev_quadrature);
    return {"T_{1,1} moment identity (n <= 30)", worst < 1e-9, fmt("max deviation %.3g", worst)};
  } catch (const std::exception& e) {
    return {"T_{1,1} moment identity (n <= 30)", false, e.what()};
  }
}

CheckResult check_s_routes() {
  try {
    const SOptimum opt = minimize_s();
    const double active =
        std::abs(opt.alpha_star * (opt.beta_star + std::numbers::sqrt2) - 2.0 * opt.s);
    const bool pass = opt.residual < 1e-12 && active < 1e-9 && opt.s < 1.8;
    return {"two-route s agreement", pass,
            fmt("s = %.12g, |P(s/2)| = %.3g", opt.s, opt.residual)};
  } catch (const std::exception& e) {
    return {"two-route s agreement", false, e.what()};
  }
}

CheckResult check_three_way_volume(long long samples, std::uint64_t seed) {
  bool pass = true;
  double worst_rel = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const VolumeResult ex = exact_volume(n);
    const VolumeResult mc = mc_volume(n, samples, seed);
    const VolumeResult rad = mc_volume_radial(n, std::max<long long>(samples / 10, 1), seed);
    const double v_ex = std::exp(ex.log_volume);
    for (const VolumeResult* m : {&mc, &rad}) {
      const double v = std::exp(m->log_volume);
      const double half_width =
          0.5 * (std::exp(*m->log_ci_high) - std::exp(*m->log_ci_low));
      const double tol = std::max(3.0 * half_width, 0.01 * v_ex);
      worst_rel = std::max(worst_rel, std::abs(v - v_ex) / v_ex);
      if (std::abs(v - v_ex) > tol) pass = false;
    }
  }
  return {"three-way volume agreement (n <= 8)", pass,
          fmt("worst relative deviation %.3g", worst_rel)};
}

CheckResult check_bound_chain() {
  const double s = minimize_s().s;
  bool pass = true;
  double worst_margin = 1.0;
  for (int n : {2, 3, 5, 10, 20, 50, 100, 200, 500, 1000}) {
    const double r = exact_volume(n, 1e-8).effective_radius;
    const double lower = schramm_lower_bound(n);
    const double upper = 0.5 * std::pow(n + 1.0, 1.0 / n) * s;
    if (!(lower <= r && r <= upper + 1e-12)) pass = false;
    worst_margin = std::min({worst_margin, r - lower, upper - r});
  }
  return {"bound-chain coherence", pass, fmt("smallest margin %.3g", worst_margin)};
}

}  // namespace

WidthCheckReport width_check(int n, long long samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("width_check: dimension must be >= 1");
  if (samples < 1) throw std::invalid_argument("width_check: need at least one sample");
  const BodySpec spec(n);
  std::mt19937_64 eng = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (long long i = 0; i < samples; ++i) {
    const Eigen::VectorXd theta = random_unit(n, eng, gauss);
    worst = std::max(worst, std::abs(width(spec, theta) - 2.0));
  }
  WidthCheckReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.max_abs_deviation = worst;
  rep.pass = worst < 1e-9;
  return rep;
}

std::vector<CheckResult> run_verification(long long samples, std::uint64_t seed) {
  std::vector<CheckResult> results;
  results.push_back(check_specfun());
  results.push_back(check_oracle_equivalence(std::max<long long>(samples / 10, 1), seed));
  results.push_back(check_width(std::min<long long>(samples, 100000)));
  results.push_back(check_claim_a1());
  results.push_back(check_s_routes());
  results.push_back(check_three_way_volume(samples, seed));
  results.push_back(check_bound_chain());
  return results;
}

}  // namespace cwidth
