#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace cwidth {

/// Additive tolerance applied to the squared-distance membership comparisons.
inline constexpr double kMembershipTol = 1e-12;
/// Directions must be unit vectors within this bound; no silent normalization.
inline constexpr double kUnitTol = 1e-9;

/// The body is the intersection of radius-2 balls centered on the two
/// spherical caps sqrt(2)*S and (sqrt(2)-2)*S, S the nonnegative part of
/// the unit sphere. Constant width 2 in every direction.
struct BodySpec {
  int n;
  double r_outer = std::numbers::sqrt2;            // radius of the outer cap
  double r_inner_signed = std::numbers::sqrt2 - 2.0;  // scalar of the reflected cap

  explicit BodySpec(int dim) : n(dim) {
    if (dim < 1) throw std::invalid_argument("BodySpec: dimension must be >= 1");
  }
};

/// Planar region A = {a,b >= 0 : a^2 + (b + sqrt2)^2 <= 4}. Membership of a
/// point v in the body reduces to (|v_plus|, |v_minus|) lying in A.
struct DiskSegment {
  static constexpr double center_b = -std::numbers::sqrt2;
  static constexpr double radius = 2.0;
  static constexpr double corner_a = std::numbers::sqrt2;       // (sqrt2, 0)
  static constexpr double corner_b = 2.0 - std::numbers::sqrt2;  // (0, 2-sqrt2)
};

inline bool disk_segment_contains(double a, double b, double tol = kMembershipTol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("disk_segment_contains: tol must be >= 0");
  if (a < -tol || b < -tol) return false;
  const double t = b + std::numbers::sqrt2;
  return a * a + t * t <= 4.0 + tol;
}

/// v = v_plus - v_minus with componentwise nonnegative parts and disjoint
/// supports; the split is max(v_i, 0) / max(-v_i, 0) per coordinate.
struct PositiveDecomposition {
  Eigen::VectorXd v_plus;
  Eigen::VectorXd v_minus;
  double norm_plus = 0.0;
  double norm_minus = 0.0;
};

template <typename Derived>
PositiveDecomposition positive_decomposition(const Eigen::MatrixBase<Derived>& v) {
  if (!v.allFinite()) {
    throw std::invalid_argument("positive_decomposition: coordinates must be finite");
  }
  PositiveDecomposition d;
  d.v_plus = v.cwiseMax(0.0);
  d.v_minus = (-v).cwiseMax(0.0);
  d.norm_plus = d.v_plus.norm();
  d.norm_minus = d.v_minus.norm();
  return d;
}

namespace detail {

// (|v_plus|, |v_minus|) without materializing the split vectors.
template <typename Derived>
std::pair<double, double> part_norms(const Eigen::MatrixBase<Derived>& v) {
  return {v.cwiseMax(0.0).norm(), v.cwiseMin(0.0).norm()};
}

template <typename Derived>
void check_dimension(const BodySpec& spec, const Eigen::MatrixBase<Derived>& v,
                     const char* where) {
  if (v.size() != spec.n) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch with BodySpec");
  }
}

template <typename Derived>
void check_unit(const Eigen::MatrixBase<Derived>& v, const char* where) {
  if (std::abs(v.norm() - 1.0) > kUnitTol) {
    throw std::invalid_argument(std::string(where) + ": direction must be a unit vector");
  }
}

}  // namespace detail

/// Fast membership oracle: v in M iff (|v_plus|, |v_minus|) lies in A.
template <typename Derived>
bool contains(const BodySpec& spec, const Eigen::MatrixBase<Derived>& v,
              double tol = kMembershipTol) {
  detail::check_dimension(spec, v, "contains");
  const auto [p, q] = detail::part_norms(v);
  return disk_segment_contains(p, q, tol);
}

/// Definitional membership oracle: v lies within distance 2 of every point of
/// both caps. The two cap suprema have closed forms,
///   sup over sqrt2*S:      |v_plus|^2 + (|v_minus| + sqrt2)^2
///   sup over (sqrt2-2)*S:  (|v_plus| + 2 - sqrt2)^2 + |v_minus|^2
/// and both remain valid when v_minus = 0 or v_plus = 0.
template <typename Derived>
bool contains_definitional(const BodySpec& spec, const Eigen::MatrixBase<Derived>& v,
                           double tol = kMembershipTol) {
  detail::check_dimension(spec, v, "contains_definitional");
  if (!(tol >= 0.0)) throw std::invalid_argument("contains_definitional: tol must be >= 0");
  const auto [p, q] = detail::part_norms(v);
  const double t1 = p * p + (q + std::numbers::sqrt2) * (q + std::numbers::sqrt2);
  const double r = p + (2.0 - std::numbers::sqrt2);
  const double t2 = r * r + q * q;
  return t1 <= 4.0 + tol && t2 <= 4.0 + tol;
}

/// Support function h(theta) = max over (a,b) in A of a|theta_plus| + b|theta_minus|.
/// Closed form: sqrt2*|theta_plus| when |theta_plus| >= |theta_minus|,
/// else 2 - sqrt2*|theta_minus| (the disk maximum leaves the quadrant otherwise).
template <typename Derived>
double support(const BodySpec& spec, const Eigen::MatrixBase<Derived>& theta) {
  detail::check_dimension(spec, theta, "support");
  detail::check_unit(theta, "support");
  const auto [p, q] = detail::part_norms(theta);
  return p >= q ? std::numbers::sqrt2 * p : 2.0 - std::numbers::sqrt2 * q;
}

/// Width in direction theta: h(theta) + h(-theta). Equals 2 for every unit theta.
template <typename Derived>
double width(const BodySpec& spec, const Eigen::MatrixBase<Derived>& theta) {
  return support(spec, theta) + support(spec, -theta);
}

/// Radial function: the largest t >= 0 with t*u in the body,
/// rho(u) = sqrt(2|u_minus|^2 + 2) - sqrt2*|u_minus|, written in the
/// cancellation-free rationalized form.
template <typename Derived>
double radial_extent(const BodySpec& spec, const Eigen::MatrixBase<Derived>& u) {
  detail::check_dimension(spec, u, "radial_extent");
  detail::check_unit(u, "radial_extent");
  const double q = u.cwiseMin(0.0).norm();
  return 2.0 / (std::sqrt(2.0 * q * q + 2.0) + std::numbers::sqrt2 * q);
}

/// Member-point generator a*u - b*w for (a,b) in A and unit u,w in the
/// nonnegative orthant. Covers all of M as (a,b,u,w) range over their domains.
template <typename DerivedU, typename DerivedW>
Eigen::VectorXd sample_boundary_point(const BodySpec& spec, double a, double b,
                                      const Eigen::MatrixBase<DerivedU>& u,
                                      const Eigen::MatrixBase<DerivedW>& w) {
  if (!disk_segment_contains(a, b)) {
    throw std::invalid_argument("sample_boundary_point: (a,b) must lie in the disk segment A");
  }
  detail::check_dimension(spec, u, "sample_boundary_point");
  detail::check_dimension(spec, w, "sample_boundary_point");
  detail::check_unit(u, "sample_boundary_point");
  detail::check_unit(w, "sample_boundary_point");
  if ((u.array() < 0.0).any() || (w.array() < 0.0).any()) {
    throw std::invalid_argument("sample_boundary_point: u and w must have nonnegative entries");
  }
  return a * u - b * w;
}

}  // namespace cwidth
