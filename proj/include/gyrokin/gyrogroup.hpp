#pragma once

#include <Eigen/Dense>

#include <cmath>

#include "gyrokin/beta_vector.hpp"

namespace gyrokin {

/// gamma - 1 evaluated as gamma^2 beta^2 / (gamma + 1), which keeps its
/// relative accuracy for small speeds.
template <typename Scalar>
Scalar gamma_minus_one(const BetaVector<Scalar>& v) {
  const Scalar g = gamma(v);
  return g * g * v.squared_norm() / (g + Scalar(1));
}

/// Einstein addition of parallel speeds, (a + b) / (1 + ab).
template <typename Scalar>
Scalar parallel_add(Scalar a, Scalar b) {
  return (a + b) / (Scalar(1) + a * b);
}

/// u (+) v in the unit ball.
template <typename Scalar>
BetaVector<Scalar> einstein_add(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  require_same_dimension(u, v, "einstein_add");
  const Scalar gu = gamma(u);
  const Scalar uv = u.dot(v);
  const auto& uc = u.coords();
  return BetaVector<Scalar>::from_expression(
      (uc + v.coords() / gu + (gu / (Scalar(1) + gu) * uv) * uc) / (Scalar(1) + uv));
}

/// u (-) v = u (+) (-v).
template <typename Scalar>
BetaVector<Scalar> einstein_sub(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  return einstein_add(u, -v);
}

/// gamma of u (+) v through the gamma identity, without forming the sum.
template <typename Scalar>
Scalar gamma_of_sum(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  require_same_dimension(u, v, "gamma_of_sum");
  return gamma(u).value() * gamma(v).value() * (Scalar(1) + u.dot(v));
}

/// Thomas gyration gyr[u,v] as a linear operator on the ambient space.
///
/// Applies w -> w + (A u + B v) / D. A and B are linear in w, so only their
/// coefficients on (u.w) and (v.w) are kept; the inner products are taken
/// against the stored generators on each application.
template <typename Scalar = double>
class Gyration {
 public:
  Gyration(BetaVector<Scalar> u, BetaVector<Scalar> v) : u_(std::move(u)), v_(std::move(v)) {
    require_same_dimension(u_, v_, "gyration");
    const Scalar gu = gamma(u_);
    const Scalar gv = gamma(v_);
    const Scalar gu_m1 = gamma_minus_one(u_);
    const Scalar gv_m1 = gamma_minus_one(v_);
    const Scalar uv = u_.dot(v_);
    a_u_ = -gu * gu / (gu + Scalar(1)) * gv_m1;
    a_v_ = gu * gv + Scalar(2) * gu * gu * gv * gv / ((gu + Scalar(1)) * (gv + Scalar(1))) * uv;
    b_u_ = -gu * gv;
    b_v_ = -gu_m1 * gv * gv / (gv + Scalar(1));
    d_ = gu * gv * (Scalar(1) + uv) + Scalar(1);
  }

  const BetaVector<Scalar>& u() const noexcept { return u_; }
  const BetaVector<Scalar>& v() const noexcept { return v_; }

  /// D = gamma_{u(+)v} + 1.
  Scalar d() const noexcept { return d_; }

  struct Coefficients {
    Scalar a;
    Scalar b;
    Scalar d;
  };

  template <typename Derived>
  Coefficients coefficients(const Eigen::MatrixBase<Derived>& w) const {
    const Scalar uw = u_.coords().dot(w);
    const Scalar vw = v_.coords().dot(w);
    return {a_u_ * uw + a_v_ * vw, b_u_ * uw + b_v_ * vw, d_};
  }

  /// Accepts any ambient vector, not only ball elements.
  template <typename Derived>
  Vector<Scalar> apply(const Eigen::MatrixBase<Derived>& w) const {
    if (w.size() != u_.dim()) throw DimensionError("gyration: dimension mismatch");
    const Coefficients k = coefficients(w);
    return w + (k.a * u_.coords() + k.b * v_.coords()) / k.d;
  }

  BetaVector<Scalar> operator()(const BetaVector<Scalar>& w) const {
    return BetaVector<Scalar>(apply(w.coords()));
  }

  Gyration inverse() const { return Gyration(v_, u_); }

  Matrix<Scalar> matrix() const {
    const Eigen::Index n = u_.dim();
    Matrix<Scalar> m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) m.col(j) = apply(Vector<Scalar>::Unit(n, j));
    return m;
  }

  /// Signed rotation angle in the plane spanned by u and v, measured from u
  /// towards v. Zero whenever the gyration is trivial.
  Scalar rotation_angle() const {
    if (u_.is_identity() || v_.is_identity()) return Scalar(0);
    const Vector<Scalar> e1 = u_.coords().normalized();
    Vector<Scalar> e2 = v_.coords() - v_.coords().dot(e1) * e1;
    const Scalar len = e2.norm();
    if (!(len > Scalar(1e-14) * v_.norm())) return Scalar(0);
    e2 /= len;
    const Vector<Scalar> r1 = apply(e1);
    return std::atan2(e2.dot(r1), e1.dot(r1));
  }

 private:
  BetaVector<Scalar> u_;
  BetaVector<Scalar> v_;
  Scalar a_u_, a_v_, b_u_, b_v_, d_;
};

template <typename Scalar>
Gyration<Scalar> gyration(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  return Gyration<Scalar>(u, v);
}

/// gyr[u,v]w straight from its definition, (-)(u(+)v) (+) (u (+) (v (+) w)).
/// Needs w inside the ball.
template <typename Scalar>
BetaVector<Scalar> gyration_definitional(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v,
                                         const BetaVector<Scalar>& w) {
  return einstein_add(-einstein_add(u, v), einstein_add(u, einstein_add(v, w)));
}

/// m (+) m = 2m / (1 + |m|^2).
template <typename Scalar>
BetaVector<Scalar> double_in_ball(const BetaVector<Scalar>& m) {
  return BetaVector<Scalar>::from_expression(Scalar(2) * m.coords() / (Scalar(1) + m.squared_norm()));
}

/// Coaddition u [+] v = 2 (.) (gamma_u u + gamma_v v) / (gamma_u + gamma_v).
/// Symmetric in its arguments bit for bit.
template <typename Scalar>
BetaVector<Scalar> coadd(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  require_same_dimension(u, v, "coadd");
  const Scalar gu = gamma(u);
  const Scalar gv = gamma(v);
  return double_in_ball(BetaVector<Scalar>::from_expression((gu * u.coords() + gv * v.coords()) / (gu + gv)));
}

/// Coaddition from its gyrogroup definition, u (+) gyr[u,(-)v]v.
template <typename Scalar>
BetaVector<Scalar> coadd_via_gyration(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  return einstein_add(u, gyration(u, -v)(v));
}

/// Cosubtraction u [-] v = u (-) gyr[u,v]v; solves x (+) v = u for x.
template <typename Scalar>
BetaVector<Scalar> cosub(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  return einstein_sub(u, gyration(u, v)(v));
}

}  // namespace gyrokin
