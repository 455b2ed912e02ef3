#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "gyrokin/gyrogroup.hpp"

namespace gyrokin {

template <typename Scalar = double>
class Particle {
 public:
  Particle(Scalar mass, BetaVector<Scalar> velocity) : mass_(mass), velocity_(std::move(velocity)) {
    if (!std::isfinite(mass)) throw NonFiniteError("particle mass is not finite");
    if (!(mass > Scalar(0))) throw InvalidArgumentError("particle mass must be positive");
  }

  Scalar mass() const noexcept { return mass_; }
  const BetaVector<Scalar>& velocity() const noexcept { return velocity_; }

  /// Relativistic mass m gamma_v, the time component of the four-momentum.
  Scalar energy() const { return mass_ * gamma(velocity_).value(); }
  Vector<Scalar> momentum() const { return energy() * velocity_.coords(); }

 private:
  Scalar mass_;
  BetaVector<Scalar> velocity_;
};

/// Noninteracting particles, all velocities measured in one rest frame.
template <typename Scalar = double>
class ParticleSystem {
 public:
  explicit ParticleSystem(std::vector<Particle<Scalar>> particles) : particles_(std::move(particles)) {
    if (particles_.empty()) throw InvalidArgumentError("particle system must hold at least one particle");
    const Eigen::Index n = particles_.front().velocity().dim();
    for (const auto& p : particles_) {
      if (p.velocity().dim() != n) throw DimensionError("particle system: velocity dimensions differ");
    }
  }

  const std::vector<Particle<Scalar>>& particles() const noexcept { return particles_; }
  std::size_t size() const noexcept { return particles_.size(); }
  Eigen::Index dim() const { return particles_.front().velocity().dim(); }

 private:
  std::vector<Particle<Scalar>> particles_;
};

template <typename Scalar = double>
struct MassDecomposition {
  Scalar m0;
  BetaVector<Scalar> v0;
  Scalar m_newton;
  Scalar m_dark;
  Scalar gamma0;
};

/// gamma_{(-)u(+)v} - 1 without forming the difference velocity.
///
/// From the gamma identity, gamma_{(-)u(+)v} = g_u g_v (1 - u.v), and
/// 1 - u.v - 1/(g_u g_v) = ((1/g_u - 1/g_v)^2 + |u - v|^2) / 2, which has no
/// cancellation for nearly equal velocities and is exactly zero for u == v.
template <typename Scalar>
Scalar relative_gamma_minus_one(const BetaVector<Scalar>& u, const BetaVector<Scalar>& v) {
  require_same_dimension(u, v, "relative_gamma_minus_one");
  const Scalar gu = gamma(u);
  const Scalar gv = gamma(v);
  const Scalar ia = Scalar(1) / gu;
  const Scalar ib = Scalar(1) / gv;
  // 1/g_u - 1/g_v = (v^2 - u^2) / (1/g_u + 1/g_v)
  const Scalar diff_sq_norms = (v.coords() - u.coords()).dot(v.coords() + u.coords());
  const Scalar d_inv = diff_sq_norms / (ia + ib);
  return gu * gv * Scalar(0.5) * (d_inv * d_inv + (u.coords() - v.coords()).squaredNorm());
}

template <typename Scalar>
Scalar total_energy(const ParticleSystem<Scalar>& sys) {
  Scalar e = 0;
  for (const auto& p : sys.particles()) e += p.energy();
  return e;
}

template <typename Scalar>
Vector<Scalar> total_momentum(const ParticleSystem<Scalar>& sys) {
  Vector<Scalar> m = Vector<Scalar>::Zero(sys.dim());
  for (const auto& p : sys.particles()) m += p.momentum();
  return m;
}

template <typename Scalar>
Scalar newtonian_mass(const ParticleSystem<Scalar>& sys) {
  Scalar m = 0;
  for (const auto& p : sys.particles()) m += p.mass();
  return m;
}

/// 2 sum_{j<k} m_j m_k (gamma_{(-)v_j(+)v_k} - 1).
template <typename Scalar>
Scalar dark_mass_squared(const ParticleSystem<Scalar>& sys) {
  const auto& ps = sys.particles();
  Scalar acc = 0;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    for (std::size_t k = j + 1; k < ps.size(); ++k) {
      acc += ps[j].mass() * ps[k].mass() * relative_gamma_minus_one(ps[j].velocity(), ps[k].velocity());
    }
  }
  return Scalar(2) * acc;
}

/// v0 = sum m_k g_k v_k / sum m_k g_k; a convex combination of ball points.
template <typename Scalar>
BetaVector<Scalar> cm_velocity(const ParticleSystem<Scalar>& sys) {
  if (sys.size() == 1) return sys.particles().front().velocity();
  return BetaVector<Scalar>(Vector<Scalar>(total_momentum(sys) / total_energy(sys)));
}

template <typename Scalar>
Scalar invariant_mass(const ParticleSystem<Scalar>& sys) {
  const Scalar mn = newtonian_mass(sys);
  return std::sqrt(mn * mn + dark_mass_squared(sys));
}

template <typename Scalar>
MassDecomposition<Scalar> decompose(const ParticleSystem<Scalar>& sys) {
  const Scalar mn = newtonian_mass(sys);
  const Scalar md2 = dark_mass_squared(sys);
  BetaVector<Scalar> v0 = cm_velocity(sys);
  const Scalar g0 = gamma(v0);
  return {std::sqrt(mn * mn + md2), std::move(v0), mn, std::sqrt(md2), g0};
}

/// |(E, P) - (m0 g0, m0 g0 v0)| for the summed four-momentum of sys.
template <typename Scalar>
Scalar four_momentum_residual(const ParticleSystem<Scalar>& sys, const MassDecomposition<Scalar>& d) {
  const Scalar e = total_energy(sys);
  const Vector<Scalar> p = total_momentum(sys);
  const Scalar e0 = d.m0 * d.gamma0;
  const Scalar de = e - e0;
  return std::sqrt(de * de + (p - e0 * d.v0.coords()).squaredNorm());
}

/// Perfectly inelastic merge of two particles; four-momentum is conserved.
template <typename Scalar>
Particle<Scalar> collide_and_stick(const Particle<Scalar>& p1, const Particle<Scalar>& p2) {
  const ParticleSystem<Scalar> sys({p1, p2});
  const MassDecomposition<Scalar> d = decompose(sys);
  return Particle<Scalar>(d.m0, d.v0);
}

}  // namespace gyrokin
