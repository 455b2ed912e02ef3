#pragma once

#include <cmath>
#include <vector>

#include "gyrokin/mass.hpp"

namespace gyrokin::testing {

/// sqrt(E^2 - |P|^2) of the summed four-momentum, accumulated in long double
/// from the raw velocity components.
inline double minkowski_mass(const ParticleSystem<double>& sys) {
  const Eigen::Index n = sys.dim();
  long double e = 0;
  std::vector<long double> p(static_cast<std::size_t>(n), 0.0L);
  for (const auto& particle : sys.particles()) {
    long double v2 = 0;
    for (Eigen::Index i = 0; i < n; ++i) v2 += static_cast<long double>(particle.velocity()[i]) * particle.velocity()[i];
    const long double g = 1.0L / std::sqrt(1.0L - v2);
    const long double mg = particle.mass() * g;
    e += mg;
    for (Eigen::Index i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] += mg * particle.velocity()[i];
  }
  long double p2 = 0;
  for (long double c : p) p2 += c * c;
  return static_cast<double>(std::sqrt((e - std::sqrt(p2)) * (e + std::sqrt(p2))));
}

}  // namespace gyrokin::testing
