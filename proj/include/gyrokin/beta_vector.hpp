#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "gyrokin/errors.hpp"
#include "gyrokin/tolerances.hpp"

namespace gyrokin {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A velocity in units of c: a point of the open unit ball in R^n.
///
/// Every constructor validates admissibility, so holding a BetaVector is
/// proof that its gamma factor is finite. Negation keeps a vector in the
/// ball and skips the check.
template <typename Scalar = double>
class BetaVector {
 public:
  using scalar_type = Scalar;

  explicit BetaVector(Vector<Scalar> coords) : coords_(std::move(coords)) { validate(); }

  BetaVector(std::initializer_list<Scalar> coords) : coords_(static_cast<Eigen::Index>(coords.size())) {
    Eigen::Index i = 0;
    for (Scalar c : coords) coords_[i++] = c;
    validate();
  }

  template <typename Derived>
  static BetaVector from_expression(const Eigen::MatrixBase<Derived>& expr) {
    return BetaVector(Vector<Scalar>(expr));
  }

  static BetaVector zero(Eigen::Index dim) {
    if (dim < 1) throw DimensionError("BetaVector dimension must be >= 1");
    return BetaVector(Vector<Scalar>::Zero(dim), Unchecked{});
  }

  const Vector<Scalar>& coords() const noexcept { return coords_; }
  Eigen::Index dim() const noexcept { return coords_.size(); }
  Scalar operator[](Eigen::Index i) const { return coords_[i]; }

  Scalar squared_norm() const { return coords_.squaredNorm(); }
  Scalar norm() const { return coords_.norm(); }
  Scalar dot(const BetaVector& other) const { return coords_.dot(other.coords_); }

  bool is_identity() const {
    return (coords_.array().abs() < Scalar(kIdentityEpsilon)).all();
  }

  /// The gyrogroup inverse; for Einstein addition it is plain negation.
  BetaVector operator-() const { return BetaVector(Vector<Scalar>(-coords_), Unchecked{}); }

  friend bool operator==(const BetaVector& a, const BetaVector& b) {
    if (a.dim() != b.dim()) return false;
    if (a.is_identity() && b.is_identity()) return true;
    return a.coords_ == b.coords_;
  }

 private:
  struct Unchecked {};
  BetaVector(Vector<Scalar> coords, Unchecked) : coords_(std::move(coords)) {}

  void validate() const {
    if (coords_.size() < 1) throw DimensionError("BetaVector dimension must be >= 1");
    if (!coords_.allFinite()) throw NonFiniteError("BetaVector has non-finite components");
    const Scalar sq = coords_.squaredNorm();
    if (!(sq <= Scalar(1) - Scalar(kBallMargin))) {
      std::ostringstream os;
      os.precision(17);
      os << "velocity outside the admissible ball: |v|^2 = " << sq << " > 1 - " << kBallMargin;
      throw AdmissibilityError(os.str());
    }
  }

  Vector<Scalar> coords_;
};

/// Lorentz factor, always >= 1. Converts implicitly to its scalar value.
template <typename Scalar = double>
class GammaFactor {
 public:
  explicit GammaFactor(Scalar value) : value_(value) {
    if (!(value >= Scalar(1))) throw InvalidArgumentError("gamma factor must be >= 1");
  }
  Scalar value() const noexcept { return value_; }
  operator Scalar() const noexcept { return value_; }

  /// beta^2 recovered through (gamma^2 - 1) / gamma^2.
  Scalar squared_speed() const { return (value_ * value_ - Scalar(1)) / (value_ * value_); }
  Scalar speed() const { return std::sqrt(squared_speed()); }

 private:
  Scalar value_;
};

template <typename Scalar>
void require_same_dimension(const BetaVector<Scalar>& a, const BetaVector<Scalar>& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(os.str());
  }
}

/// gamma for a scalar speed |beta| < 1.
template <typename Scalar>
GammaFactor<Scalar> gamma_of_speed(Scalar beta) {
  if (!std::isfinite(beta)) throw NonFiniteError("speed is not finite");
  const Scalar sq = beta * beta;
  if (!(sq <= Scalar(1) - Scalar(kBallMargin))) throw AdmissibilityError("speed outside the admissible range");
  return GammaFactor<Scalar>(Scalar(1) / std::sqrt(Scalar(1) - sq));
}

template <typename Scalar>
GammaFactor<Scalar> gamma(const BetaVector<Scalar>& v) {
  return GammaFactor<Scalar>(Scalar(1) / std::sqrt(Scalar(1) - v.squared_norm()));
}

/// Proper speed gamma*beta mapped back to beta; inverse of beta -> gamma(beta)*beta.
template <typename Scalar>
Scalar speed_from_proper_speed(Scalar proper) {
  return proper / std::sqrt(Scalar(1) + proper * proper);
}

}  // namespace gyrokin
