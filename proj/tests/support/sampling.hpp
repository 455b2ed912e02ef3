#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>

#include "gyrokin/beta_vector.hpp"

namespace gyrokin::testing {

/// Seeded generator of ball points for property tests.
class BallSampler {
 public:
  explicit BallSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vector<double> direction(Eigen::Index dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector<double> d(dim);
    do {
      for (Eigen::Index i = 0; i < dim; ++i) d[i] = normal(rng_);
    } while (d.norm() < 1e-3);
    return d.normalized();
  }

  /// Norm drawn uniformly from [min_norm, max_norm].
  BetaVector<double> point(Eigen::Index dim, double max_norm, double min_norm = 0.0) {
    return BetaVector<double>(Vector<double>(uniform(min_norm, max_norm) * direction(dim)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const Vector<double>& a, const Vector<double>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const BetaVector<double>& a, const BetaVector<double>& b) {
  return max_abs_diff(a.coords(), b.coords());
}

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace gyrokin::testing
