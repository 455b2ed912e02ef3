#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "gyrokin/gyrogroup.hpp"

namespace gyrokin {

/// Points of the ball share the BetaVector representation.
template <typename Scalar = double>
using Point = BetaVector<Scalar>;

/// Largest norm scalar multiplication will produce; tanh saturates to 1 in
/// floating point long before r * artanh|v| gets large.
template <typename Scalar>
Scalar max_admissible_norm() {
  return std::sqrt(Scalar(1) - Scalar(2 * kBallMargin));
}

/// r (.) v = tanh(r artanh|v|) v/|v|, with r (.) 0 = 0.
template <typename Scalar>
BetaVector<Scalar> scalar_mul(std::type_identity_t<Scalar> r, const BetaVector<Scalar>& v) {
  if (!std::isfinite(r)) throw NonFiniteError("scalar_mul: scalar is not finite");
  if (v.is_identity()) return BetaVector<Scalar>::zero(v.dim());
  const Scalar n = v.norm();
  Scalar t = std::tanh(r * std::atanh(n));
  const Scalar cap = max_admissible_norm<Scalar>();
  t = std::clamp(t, -cap, cap);
  return BetaVector<Scalar>::from_expression(v.coords() * (t / n));
}

/// d(a,b) = |(-)a (+) b|.
template <typename Scalar>
Scalar gyrodistance(const Point<Scalar>& a, const Point<Scalar>& b) {
  return einstein_add(-a, b).norm();
}

/// A (+) ((-)A (+) B) (.) t for every real t. A degenerate line (A == B, or
/// a gyrosegment shorter than the degenerate-length tolerance) maps every t
/// to A and reports itself through degenerate().
template <typename Scalar = double>
class Gyroline {
 public:
  Gyroline(Point<Scalar> a, const Point<Scalar>& b, const Tolerances& tol = kDefaultTolerances)
      : a_(std::move(a)),
        direction_(einstein_add(-a_, b)),
        degenerate_(a_ == b || direction_.norm() < Scalar(tol.degenerate_length)) {}

  bool degenerate() const noexcept { return degenerate_; }
  const Point<Scalar>& origin() const noexcept { return a_; }
  const BetaVector<Scalar>& direction() const noexcept { return direction_; }

  Point<Scalar> operator()(Scalar t) const {
    if (degenerate_) return a_;
    return einstein_add(a_, scalar_mul(t, direction_));
  }

 private:
  Point<Scalar> a_;
  BetaVector<Scalar> direction_;
  bool degenerate_;
};

/// Strict form of Gyroline: throws DegenerateLine when a == b.
template <typename Scalar>
Point<Scalar> gyroline_point(const Point<Scalar>& a, const Point<Scalar>& b, std::type_identity_t<Scalar> t) {
  const Gyroline<Scalar> line(a, b);
  if (line.degenerate()) throw DegenerateLineError("gyroline_point: a and b coincide");
  return line(t);
}

/// Gyromidpoint in its gamma-weighted form (gamma_a a + gamma_b b) / (gamma_a + gamma_b).
template <typename Scalar>
Point<Scalar> gyromidpoint(const Point<Scalar>& a, const Point<Scalar>& b) {
  require_same_dimension(a, b, "gyromidpoint");
  const Scalar ga = gamma(a);
  const Scalar gb = gamma(b);
  return Point<Scalar>::from_expression((ga * a.coords() + gb * b.coords()) / (ga + gb));
}

template <typename Scalar>
Point<Scalar> gyromidpoint_via_line(const Point<Scalar>& a, const Point<Scalar>& b) {
  return einstein_add(a, scalar_mul(Scalar(0.5), einstein_add(-a, b)));
}

template <typename Scalar>
Point<Scalar> gyromidpoint_via_coadd(const Point<Scalar>& a, const Point<Scalar>& b) {
  return scalar_mul(Scalar(0.5), coadd(a, b));
}

/// Area of the Euclidean triangle abc in ambient coordinates. Gyrolines are
/// chords, so this is zero exactly when the points are gyrocollinear.
template <typename Scalar>
Scalar ambient_triangle_area(const Point<Scalar>& a, const Point<Scalar>& b, const Point<Scalar>& c) {
  require_same_dimension(a, b, "ambient_triangle_area");
  require_same_dimension(a, c, "ambient_triangle_area");
  // base times height, with the height taken by projection; a Gram
  // determinant would cancel down to sqrt(eps) for nearly collinear points
  const Vector<Scalar> ab = b.coords() - a.coords();
  const Vector<Scalar> ac = c.coords() - a.coords();
  const Scalar base = ab.norm();
  if (base == Scalar(0)) return Scalar(0);
  const Vector<Scalar> e = ab / base;
  const Vector<Scalar> height = ac - ac.dot(e) * e;
  return Scalar(0.5) * base * height.norm();
}

template <typename Scalar>
bool gyrocollinear(const Point<Scalar>& a, const Point<Scalar>& b, const Point<Scalar>& c,
                   const Tolerances& tol = kDefaultTolerances) {
  return ambient_triangle_area(a, b, c) < Scalar(tol.collinear_area);
}

/// D = (B [+] C) (-) A, with no collinearity check.
template <typename Scalar>
Point<Scalar> gyroparallelogram_condition(const Point<Scalar>& a, const Point<Scalar>& b, const Point<Scalar>& c) {
  return einstein_sub(coadd(b, c), a);
}

/// Fourth vertex D of the gyroparallelogram ABDC.
template <typename Scalar>
Point<Scalar> gyroparallelogram_fourth(const Point<Scalar>& a, const Point<Scalar>& b, const Point<Scalar>& c,
                                       const Tolerances& tol = kDefaultTolerances) {
  if (gyrocollinear(a, b, c, tol)) throw CollinearPointsError("gyroparallelogram: points are gyrocollinear");
  return gyroparallelogram_condition(a, b, c);
}

/// Ordered pair of points with value (-)tail (+) head.
template <typename Scalar = double>
class RootedGyrovector {
 public:
  RootedGyrovector(Point<Scalar> tail, Point<Scalar> head)
      : tail_(std::move(tail)), head_(std::move(head)), value_(einstein_add(-tail_, head_)) {}

  const Point<Scalar>& tail() const noexcept { return tail_; }
  const Point<Scalar>& head() const noexcept { return head_; }
  const BetaVector<Scalar>& value() const noexcept { return value_; }
  Scalar gyrolength() const { return value_.norm(); }

  /// Re-roots at new_tail; the head becomes new_tail (+) value and the value
  /// is carried over unchanged.
  RootedGyrovector translate_to(const Point<Scalar>& new_tail) const {
    return RootedGyrovector(new_tail, einstein_add(new_tail, value_), value_);
  }

 private:
  RootedGyrovector(Point<Scalar> tail, Point<Scalar> head, BetaVector<Scalar> value)
      : tail_(std::move(tail)), head_(std::move(head)), value_(std::move(value)) {}

  Point<Scalar> tail_;
  Point<Scalar> head_;
  BetaVector<Scalar> value_;
};

template <typename Scalar>
RootedGyrovector<Scalar> gyrovector_between(const Point<Scalar>& p, const Point<Scalar>& q) {
  return RootedGyrovector<Scalar>(p, q);
}

template <typename Scalar>
bool equivalent(const RootedGyrovector<Scalar>& g1, const RootedGyrovector<Scalar>& g2,
                const Tolerances& tol = kDefaultTolerances) {
  if (g1.value().dim() != g2.value().dim()) return false;
  return ((g1.value().coords() - g2.value().coords()).array().abs() <= Scalar(tol.component)).all();
}

/// Gyroparallelogram addition of two gyrovector values sharing a tail.
template <typename Scalar>
BetaVector<Scalar> gyrovector_coadd(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  return coadd(u, v);
}

/// G(x) = I/(1-x^2) + x x^T/(1-x^2)^2, so ds^2 = dx^T G(x) dx.
template <typename Scalar>
Matrix<Scalar> metric_tensor(const Point<Scalar>& x) {
  const Eigen::Index n = x.dim();
  const Scalar s = Scalar(1) - x.squared_norm();
  Matrix<Scalar> g = Matrix<Scalar>::Identity(n, n) / s;
  g.noalias() += x.coords() * x.coords().transpose() / (s * s);
  return g;
}

}  // namespace gyrokin
