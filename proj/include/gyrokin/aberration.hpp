#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <type_traits>
#include <vector>

#include "gyrokin/beta_vector.hpp"

namespace gyrokin {

// theta_s is the direction of the particle seen from S, theta_e from E; both
// are measured against the relative velocity v of S with respect to E.
// Every formula is evaluated as atan2(sin, cot-numerator) so the result lands
// in (0, pi) without passing through a cotangent.

inline constexpr double kArcsecPerRadian = 180.0 * 3600.0 / std::numbers::pi;

template <typename Scalar = double>
struct AberrationResult {
  Scalar theta_e;
  Scalar theta_s;
  Scalar v;
  Scalar p_e;
  Scalar p_s;
  Scalar offset;  // theta_s - theta_e, evaluated without cancellation
};

namespace detail {

template <typename Scalar>
Scalar checked_sine(Scalar theta, Scalar min_sine = Scalar(1e-14)) {
  if (!std::isfinite(theta)) throw NonFiniteError("aberration: angle is not finite");
  const Scalar s = std::sin(theta);
  if (!(theta > Scalar(0) && theta < std::numbers::pi_v<Scalar>) || s < min_sine) {
    throw AngleDegenerateError("aberration: angle must lie strictly inside (0, pi)");
  }
  return s;
}

template <typename Scalar>
void check_relative_speed(Scalar v) {
  if (!std::isfinite(v)) throw NonFiniteError("aberration: relative speed is not finite");
  if (!(std::abs(v) < Scalar(1))) throw AdmissibilityError("aberration: relative speed must satisfy |v| < 1");
}

template <typename Scalar>
void check_particle_speed(Scalar p, bool relativistic) {
  if (!std::isfinite(p)) throw NonFiniteError("aberration: particle speed is not finite");
  if (!(p > Scalar(0))) throw InvalidArgumentError("aberration: particle speed must be positive");
  if (relativistic && p > Scalar(1)) throw AdmissibilityError("aberration: particle speed exceeds c");
}

/// gamma_p p, with the photon value p = 1 mapped to infinity.
template <typename Scalar>
Scalar proper_speed(Scalar p) {
  if (p >= Scalar(1)) return std::numeric_limits<Scalar>::infinity();
  return p / std::sqrt((Scalar(1) - p) * (Scalar(1) + p));
}

template <typename Scalar>
Scalar gamma_minus_one_of_speed(Scalar v) {
  const Scalar v2 = v * v;
  const Scalar g = Scalar(1) / std::sqrt((Scalar(1) - v) * (Scalar(1) + v));
  return g * g * v2 / (g + Scalar(1));
}

}  // namespace detail

// With m = (g_v - 1) cos theta_s + g_v v/p_s, the directions of theta_s and
// theta_e differ by atan2(m sin theta_s, 1 + m cos theta_s); the inverse
// direction uses m' = g_v v/p_e - (g_v - 1) cos theta_e and a minus sign.

/// theta_s - theta_e from theta_s, classical model.
template <typename Scalar>
Scalar classical_aberration_offset(Scalar theta_s, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_s) {
  const Scalar s = detail::checked_sine(theta_s);
  if (!std::isfinite(v)) throw NonFiniteError("aberration: relative speed is not finite");
  detail::check_particle_speed(p_s, false);
  const Scalar m = v / p_s;
  return std::atan2(m * s, Scalar(1) + m * std::cos(theta_s));
}

/// theta_s - theta_e from theta_e, classical model.
template <typename Scalar>
Scalar classical_aberration_inv_offset(Scalar theta_e, std::type_identity_t<Scalar> v,
                                       std::type_identity_t<Scalar> p_e) {
  const Scalar s = detail::checked_sine(theta_e);
  if (!std::isfinite(v)) throw NonFiniteError("aberration: relative speed is not finite");
  detail::check_particle_speed(p_e, false);
  const Scalar m = v / p_e;
  return std::atan2(m * s, Scalar(1) - m * std::cos(theta_e));
}

template <typename Scalar>
Scalar relativistic_aberration_offset(Scalar theta_s, std::type_identity_t<Scalar> v,
                                      std::type_identity_t<Scalar> p_s) {
  const Scalar s = detail::checked_sine(theta_s);
  detail::check_relative_speed(v);
  detail::check_particle_speed(p_s, true);
  const Scalar gv = Scalar(1) / std::sqrt((Scalar(1) - v) * (Scalar(1) + v));
  const Scalar c = std::cos(theta_s);
  const Scalar m = detail::gamma_minus_one_of_speed(v) * c + gv * v / p_s;
  return std::atan2(m * s, Scalar(1) + m * c);
}

template <typename Scalar>
Scalar relativistic_aberration_inv_offset(Scalar theta_e, std::type_identity_t<Scalar> v,
                                          std::type_identity_t<Scalar> p_e) {
  const Scalar s = detail::checked_sine(theta_e);
  detail::check_relative_speed(v);
  detail::check_particle_speed(p_e, true);
  const Scalar gv = Scalar(1) / std::sqrt((Scalar(1) - v) * (Scalar(1) + v));
  const Scalar c = std::cos(theta_e);
  const Scalar m = gv * v / p_e - detail::gamma_minus_one_of_speed(v) * c;
  return std::atan2(m * s, Scalar(1) - m * c);
}

template <typename Scalar>
Scalar stellar_aberration_offset(Scalar theta_s, std::type_identity_t<Scalar> v) {
  return relativistic_aberration_offset(theta_s, v, Scalar(1));
}

/// cot theta_e = cot theta_s + v / (p_s sin theta_s).
template <typename Scalar>
Scalar classical_aberration(Scalar theta_s, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_s) {
  const Scalar s = detail::checked_sine(theta_s);
  if (!std::isfinite(v)) throw NonFiniteError("aberration: relative speed is not finite");
  detail::check_particle_speed(p_s, false);
  return std::atan2(s, std::cos(theta_s) + v / p_s);
}

/// cot theta_s = cot theta_e - v / (p_e sin theta_e).
template <typename Scalar>
Scalar classical_aberration_inv(Scalar theta_e, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_e) {
  const Scalar s = detail::checked_sine(theta_e);
  if (!std::isfinite(v)) throw NonFiniteError("aberration: relative speed is not finite");
  detail::check_particle_speed(p_e, false);
  return std::atan2(s, std::cos(theta_e) - v / p_e);
}

/// cot theta_e = gamma_v (cot theta_s + v / (p_s sin theta_s)).
template <typename Scalar>
Scalar relativistic_aberration(Scalar theta_s, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_s) {
  const Scalar s = detail::checked_sine(theta_s);
  detail::check_relative_speed(v);
  detail::check_particle_speed(p_s, true);
  const Scalar gv = Scalar(1) / std::sqrt((Scalar(1) - v) * (Scalar(1) + v));
  return std::atan2(s, gv * (std::cos(theta_s) + v / p_s));
}

/// cot theta_s = gamma_v (cot theta_e - v / (p_e sin theta_e)).
template <typename Scalar>
Scalar relativistic_aberration_inv(Scalar theta_e, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_e) {
  const Scalar s = detail::checked_sine(theta_e);
  detail::check_relative_speed(v);
  detail::check_particle_speed(p_e, true);
  const Scalar gv = Scalar(1) / std::sqrt((Scalar(1) - v) * (Scalar(1) + v));
  return std::atan2(s, gv * (std::cos(theta_e) - v / p_e));
}

/// Photon case p_e = p_s = 1 of the relativistic formulas.
template <typename Scalar>
Scalar stellar_aberration(Scalar theta_s, std::type_identity_t<Scalar> v) {
  return relativistic_aberration(theta_s, v, Scalar(1));
}

template <typename Scalar>
Scalar stellar_aberration_inv(Scalar theta_e, std::type_identity_t<Scalar> v) {
  return relativistic_aberration_inv(theta_e, v, Scalar(1));
}

/// Classical law of sines: p_e = p_s sin theta_s / sin theta_e.
template <typename Scalar>
Scalar classical_companion_speed(Scalar theta_s, Scalar theta_e, Scalar p_s) {
  return p_s * detail::checked_sine(theta_s) / detail::checked_sine(theta_e);
}

/// Relativistic law of gyrosines: gamma_pe p_e = gamma_ps p_s sin theta_s / sin theta_e.
/// Photons stay photons.
template <typename Scalar>
Scalar relativistic_companion_speed(Scalar theta_s, Scalar theta_e, Scalar p_s) {
  if (p_s >= Scalar(1)) return Scalar(1);
  const Scalar proper =
      detail::proper_speed(p_s) * detail::checked_sine(theta_s) / detail::checked_sine(theta_e);
  return speed_from_proper_speed(proper);
}

/// Forward solve with the companion speed filled in from the (gyro)law of sines.
template <typename Scalar>
AberrationResult<Scalar> solve_classical(Scalar theta_s, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_s) {
  const Scalar theta_e = classical_aberration(theta_s, v, p_s);
  return {theta_e, theta_s, v, classical_companion_speed(theta_s, theta_e, p_s), p_s,
          classical_aberration_offset(theta_s, v, p_s)};
}

template <typename Scalar>
AberrationResult<Scalar> solve_relativistic(Scalar theta_s, std::type_identity_t<Scalar> v, std::type_identity_t<Scalar> p_s) {
  const Scalar theta_e = relativistic_aberration(theta_s, v, p_s);
  return {theta_e, theta_s, v, relativistic_companion_speed(theta_s, theta_e, p_s), p_s,
          relativistic_aberration_offset(theta_s, v, p_s)};
}

/// Inverse solves: theta_s and p_s from theta_e and p_e.
template <typename Scalar>
AberrationResult<Scalar> solve_classical_inv(Scalar theta_e, std::type_identity_t<Scalar> v,
                                             std::type_identity_t<Scalar> p_e) {
  const Scalar theta_s = classical_aberration_inv(theta_e, v, p_e);
  return {theta_e, theta_s, v, p_e, classical_companion_speed(theta_e, theta_s, p_e),
          classical_aberration_inv_offset(theta_e, v, p_e)};
}

template <typename Scalar>
AberrationResult<Scalar> solve_relativistic_inv(Scalar theta_e, std::type_identity_t<Scalar> v,
                                                std::type_identity_t<Scalar> p_e) {
  const Scalar theta_s = relativistic_aberration_inv(theta_e, v, p_e);
  return {theta_e, theta_s, v, p_e, relativistic_companion_speed(theta_e, theta_s, p_e),
          relativistic_aberration_inv_offset(theta_e, v, p_e)};
}

template <typename Scalar>
AberrationResult<Scalar> solve_stellar(Scalar theta_s, std::type_identity_t<Scalar> v) {
  return solve_relativistic(theta_s, v, Scalar(1));
}

template <typename Scalar = double>
struct SweepRow {
  Scalar theta_s;
  Scalar theta_e_classical;
  Scalar theta_e_relativistic;
  Scalar offset_arcsec;  // theta_s - theta_e_relativistic
};

/// Tabulates theta_s -> theta_e at theta_s = pi (k+1)/(n+1), k = 0..n-1.
template <typename Scalar>
std::vector<SweepRow<Scalar>> aberration_sweep(Scalar v, Scalar p, std::size_t n_samples) {
  if (n_samples < 2) throw InvalidArgumentError("aberration_sweep: need at least two samples");
  std::vector<SweepRow<Scalar>> rows;
  rows.reserve(n_samples);
  const Scalar step = std::numbers::pi_v<Scalar> / Scalar(n_samples + 1);
  for (std::size_t k = 0; k < n_samples; ++k) {
    const Scalar ts = step * Scalar(k + 1);
    rows.push_back({ts, classical_aberration(ts, v, p), relativistic_aberration(ts, v, p),
                    relativistic_aberration_offset(ts, v, p) * Scalar(kArcsecPerRadian)});
  }
  return rows;
}

}  // namespace gyrokin
