#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gyrokin/gyrovector_space.hpp"

namespace gyrokin {

// Side a is opposite vertex A, b opposite B, c opposite C; alpha sits at A,
// beta at B, gamma at C.

template <typename Scalar = double>
struct SideGammas {
  Scalar a;
  Scalar b;
  Scalar c;
};

template <typename Scalar = double>
struct SideLengths {
  Scalar a;
  Scalar b;
  Scalar c;
};

template <typename Scalar = double>
struct TriangleAngles {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;

  Scalar sum() const { return alpha + beta + gamma; }
  Scalar defect() const { return std::numbers::pi_v<Scalar> - sum(); }
};

template <typename Scalar = double>
struct Gyrotriangle {
  Point<Scalar> A;
  Point<Scalar> B;
  Point<Scalar> C;
  SideLengths<Scalar> sides;
  SideGammas<Scalar> gammas;
  TriangleAngles<Scalar> angles;
};

/// Angle between unit vectors, 2 atan2(|a-b|, |a+b|); accurate near 0 and pi.
template <typename Scalar>
Scalar angle_between_units(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return Scalar(2) * std::atan2((a - b).norm(), (a + b).norm());
}

/// Gyroangle at vertex between the gyrovectors (-)vertex(+)p and (-)vertex(+)q.
template <typename Scalar>
Scalar gyroangle(const Point<Scalar>& vertex, const Point<Scalar>& p, const Point<Scalar>& q,
                 const Tolerances& tol = kDefaultTolerances) {
  const BetaVector<Scalar> vp = einstein_add(-vertex, p);
  const BetaVector<Scalar> vq = einstein_add(-vertex, q);
  const Scalar lp = vp.norm();
  const Scalar lq = vq.norm();
  if (lp < Scalar(tol.degenerate_length) || lq < Scalar(tol.degenerate_length)) {
    throw DegenerateAngleError("gyroangle: a gyrovector has vanishing gyrolength");
  }
  return angle_between_units<Scalar>(vp.coords() / lp, vq.coords() / lq);
}

/// Gyrocosine of the same gyroangle, from the normalized inner product.
template <typename Scalar>
Scalar gyrocosine(const Point<Scalar>& vertex, const Point<Scalar>& p, const Point<Scalar>& q) {
  const BetaVector<Scalar> vp = einstein_add(-vertex, p);
  const BetaVector<Scalar> vq = einstein_add(-vertex, q);
  return vp.dot(vq) / (vp.norm() * vq.norm());
}

/// Q = 1 + 2 g_a g_b g_c - g_a^2 - g_b^2 - g_c^2; nonnegative for real triangles.
template <typename Scalar>
Scalar triangle_quantity(const SideGammas<Scalar>& g) {
  return Scalar(1) + Scalar(2) * g.a * g.b * g.c - g.a * g.a - g.b * g.b - g.c * g.c;
}

namespace detail {

template <typename Scalar>
Scalar sqrt_gamma_sq_minus_one(Scalar g) {
  return std::sqrt((g - Scalar(1)) * (g + Scalar(1)));
}

inline void triangle_error(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (value " << value << ")";
  throw InvalidTriangleError(os.str());
}

}  // namespace detail

/// Gyrocosines of the three gyroangles from the side gammas.
template <typename Scalar>
TriangleAngles<Scalar> gyrocosines(const SideGammas<Scalar>& g) {
  using detail::sqrt_gamma_sq_minus_one;
  const Scalar ra = sqrt_gamma_sq_minus_one(g.a);
  const Scalar rb = sqrt_gamma_sq_minus_one(g.b);
  const Scalar rc = sqrt_gamma_sq_minus_one(g.c);
  return {(-g.a + g.b * g.c) / (rb * rc), (-g.b + g.a * g.c) / (ra * rc), (-g.c + g.a * g.b) / (ra * rb)};
}

/// Gyrosines in closed form, sqrt(Q) over the two adjacent side factors.
template <typename Scalar>
TriangleAngles<Scalar> gyrosines(const SideGammas<Scalar>& g, const Tolerances& tol = kDefaultTolerances) {
  using detail::sqrt_gamma_sq_minus_one;
  Scalar q = triangle_quantity(g);
  if (q < Scalar(0) && q >= -Scalar(tol.clamp)) q = Scalar(0);
  if (q < Scalar(0)) detail::triangle_error("gyrosines: triangle quantity Q is negative", double(q));
  const Scalar sq = std::sqrt(q);
  const Scalar ra = sqrt_gamma_sq_minus_one(g.a);
  const Scalar rb = sqrt_gamma_sq_minus_one(g.b);
  const Scalar rc = sqrt_gamma_sq_minus_one(g.c);
  return {sq / (rb * rc), sq / (ra * rc), sq / (ra * rb)};
}

/// The three ratios sin(angle) / sqrt(gamma_side^2 - 1); equal for any gyrotriangle.
template <typename Scalar>
SideLengths<Scalar> law_of_gyrosines_ratios(const TriangleAngles<Scalar>& angles, const SideGammas<Scalar>& g) {
  using detail::sqrt_gamma_sq_minus_one;
  return {std::sin(angles.alpha) / sqrt_gamma_sq_minus_one(g.a),
          std::sin(angles.beta) / sqrt_gamma_sq_minus_one(g.b),
          std::sin(angles.gamma) / sqrt_gamma_sq_minus_one(g.c)};
}

/// Law of gyrocosines solved for the gyroangles (SSS to AAA).
///
/// Each angle is taken as atan2(sqrt(Q), -g_a + g_b g_c), which shares the
/// positive denominator of the cosine and sine forms and stays well
/// conditioned for small and near-straight angles.
template <typename Scalar>
TriangleAngles<Scalar> sss_to_aaa(const SideGammas<Scalar>& g, const Tolerances& tol = kDefaultTolerances) {
  if (!(g.a > Scalar(1)) || !(g.b > Scalar(1)) || !(g.c > Scalar(1))) {
    throw InvalidTriangleError("sss_to_aaa: every side gamma must exceed 1");
  }
  if (!std::isfinite(g.a) || !std::isfinite(g.b) || !std::isfinite(g.c)) {
    throw NonFiniteError("sss_to_aaa: side gamma is not finite");
  }
  const TriangleAngles<Scalar> cosines = gyrocosines(g);
  for (Scalar c : {cosines.alpha, cosines.beta, cosines.gamma}) {
    if (std::abs(c) > Scalar(1) + Scalar(tol.clamp)) {
      detail::triangle_error("sss_to_aaa: |cos| exceeds 1, sides violate the gyrotriangle inequality", double(c));
    }
  }
  Scalar q = triangle_quantity(g);
  if (q < -Scalar(tol.clamp)) detail::triangle_error("sss_to_aaa: triangle quantity Q is negative", double(q));
  const Scalar sq = std::sqrt(std::max(q, Scalar(0)));
  return {std::atan2(sq, -g.a + g.b * g.c), std::atan2(sq, -g.b + g.a * g.c), std::atan2(sq, -g.c + g.a * g.b)};
}

/// AAA to SSS: side gammas are fixed by the gyroangles alone.
template <typename Scalar>
SideGammas<Scalar> aaa_to_sss(const TriangleAngles<Scalar>& t, const Tolerances& tol = kDefaultTolerances) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  for (Scalar a : {t.alpha, t.beta, t.gamma}) {
    if (!std::isfinite(a)) throw NonFiniteError("aaa_to_sss: angle is not finite");
    if (!(a > Scalar(0) && a < pi)) throw NoSuchTriangleError("aaa_to_sss: every gyroangle must lie in (0, pi)");
  }
  if (t.sum() >= pi - Scalar(tol.angle_sum)) {
    std::ostringstream os;
    os.precision(17);
    os << "aaa_to_sss: angle sum " << double(t.sum()) << " leaves no positive defect";
    throw NoSuchTriangleError(os.str());
  }
  const Scalar ca = std::cos(t.alpha), cb = std::cos(t.beta), cc = std::cos(t.gamma);
  const Scalar sa = std::sin(t.alpha), sb = std::sin(t.beta), sc = std::sin(t.gamma);
  const SideGammas<Scalar> g{(ca + cb * cc) / (sb * sc), (cb + ca * cc) / (sa * sc), (cc + ca * cb) / (sa * sb)};
  if (!(g.a > Scalar(1)) || !(g.b > Scalar(1)) || !(g.c > Scalar(1))) {
    throw NoSuchTriangleError("aaa_to_sss: computed side gamma does not exceed 1");
  }
  return g;
}

/// Side gyrolength from its gamma, a = sqrt((g^2 - 1) / g^2).
template <typename Scalar>
Scalar side_from_gamma(Scalar g) {
  return std::sqrt((g - Scalar(1)) * (g + Scalar(1))) / g;
}

template <typename Scalar>
SideLengths<Scalar> sides_from_gammas(const SideGammas<Scalar>& g) {
  return {side_from_gamma(g.a), side_from_gamma(g.b), side_from_gamma(g.c)};
}

template <typename Scalar>
SideGammas<Scalar> gammas_from_sides(const SideLengths<Scalar>& s) {
  return {gamma_of_speed(s.a).value(), gamma_of_speed(s.b).value(), gamma_of_speed(s.c).value()};
}

/// Builds the full gyrotriangle record from three non-gyrocollinear points.
/// Angles are measured geometrically at each vertex.
template <typename Scalar>
Gyrotriangle<Scalar> triangle_from_vertices(const Point<Scalar>& A, const Point<Scalar>& B, const Point<Scalar>& C,
                                            const Tolerances& tol = kDefaultTolerances) {
  if (gyrocollinear(A, B, C, tol)) throw CollinearPointsError("triangle_from_vertices: points are gyrocollinear");
  const BetaVector<Scalar> bc = einstein_add(-B, C);
  const BetaVector<Scalar> ac = einstein_add(-A, C);
  const BetaVector<Scalar> ab = einstein_add(-A, B);
  SideLengths<Scalar> sides{bc.norm(), ac.norm(), ab.norm()};
  SideGammas<Scalar> gammas{gamma(bc).value(), gamma(ac).value(), gamma(ab).value()};
  TriangleAngles<Scalar> angles{gyroangle(A, B, C, tol), gyroangle(B, A, C, tol), gyroangle(C, A, B, tol)};
  return {A, B, C, sides, gammas, angles};
}

/// Residuals of the right-gyrotriangle identities, all zero in exact arithmetic.
template <typename Scalar = double>
struct RightTriangleReport {
  Scalar gamma_a_from_angles;      // g_a - cos(alpha)/sin(beta)
  Scalar gamma_b_from_angles;      // g_b - cos(beta)/sin(alpha)
  Scalar gamma_c_from_angles;      // g_c - cos(alpha)cos(beta)/(sin(alpha)sin(beta))
  Scalar einstein_pythagoras;      // g_a g_b - g_c
  Scalar cos_alpha_ratio;          // cos(alpha) - b/c
  Scalar cos_beta_ratio;           // cos(beta) - a/c
  Scalar sin_alpha_ratio;          // sin(alpha) - g_a a / (g_c c)
  Scalar sin_beta_ratio;           // sin(beta) - g_b b / (g_c c)
  Scalar pythagorean_first;        // a^2 + (g_b/g_c)^2 b^2 - c^2
  Scalar pythagorean_second;       // (g_a/g_c)^2 a^2 + b^2 - c^2
  Scalar euclidean_pythagorean;    // (a^2 + b^2)/c^2 - 1, vanishing only in the Euclidean limit

  Scalar max_identity_residual() const {
    using std::abs;
    Scalar m = 0;
    for (Scalar r : {gamma_a_from_angles, gamma_b_from_angles, gamma_c_from_angles, einstein_pythagoras,
                     cos_alpha_ratio, cos_beta_ratio, sin_alpha_ratio, sin_beta_ratio, pythagorean_first,
                     pythagorean_second}) {
      m = std::max(m, abs(r));
    }
    return m;
  }
};

template <typename Scalar>
RightTriangleReport<Scalar> right_triangle_relations(const Gyrotriangle<Scalar>& tri,
                                                     const Tolerances& tol = kDefaultTolerances) {
  constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / Scalar(2);
  if (std::abs(tri.angles.gamma - half_pi) > Scalar(tol.right_angle)) {
    throw NotRightTriangleError("right_triangle_relations: gyroangle at C is not pi/2");
  }
  const auto& s = tri.sides;
  const auto& g = tri.gammas;
  const Scalar ca = std::cos(tri.angles.alpha), cb = std::cos(tri.angles.beta);
  const Scalar sa = std::sin(tri.angles.alpha), sb = std::sin(tri.angles.beta);
  const Scalar rb = g.b / g.c;
  const Scalar ra = g.a / g.c;
  RightTriangleReport<Scalar> r{};
  r.gamma_a_from_angles = g.a - ca / sb;
  r.gamma_b_from_angles = g.b - cb / sa;
  r.gamma_c_from_angles = g.c - ca * cb / (sa * sb);
  r.einstein_pythagoras = g.a * g.b - g.c;
  r.cos_alpha_ratio = ca - s.b / s.c;
  r.cos_beta_ratio = cb - s.a / s.c;
  r.sin_alpha_ratio = sa - g.a * s.a / (g.c * s.c);
  r.sin_beta_ratio = sb - g.b * s.b / (g.c * s.c);
  r.pythagorean_first = s.a * s.a + rb * rb * s.b * s.b - s.c * s.c;
  r.pythagorean_second = ra * ra * s.a * s.a + s.b * s.b - s.c * s.c;
  r.euclidean_pythagorean = (s.a * s.a + s.b * s.b) / (s.c * s.c) - Scalar(1);
  return r;
}

}  // namespace gyrokin
