#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyrokin {

enum class ErrorKind {
  Admissibility,
  Dimension,
  NonFinite,
  InvalidArgument,
  DegenerateLine,
  CollinearPoints,
  DegenerateAngle,
  InvalidTriangle,
  NoSuchTriangle,
  NotRightTriangle,
  AngleDegenerate,
};

constexpr std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Admissibility: return "AdmissibilityError";
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::NonFinite: return "NonFiniteError";
    case ErrorKind::InvalidArgument: return "InvalidArgumentError";
    case ErrorKind::DegenerateLine: return "DegenerateLineError";
    case ErrorKind::CollinearPoints: return "CollinearPointsError";
    case ErrorKind::DegenerateAngle: return "DegenerateAngleError";
    case ErrorKind::InvalidTriangle: return "InvalidTriangleError";
    case ErrorKind::NoSuchTriangle: return "NoSuchTriangleError";
    case ErrorKind::NotRightTriangle: return "NotRightTriangleError";
    case ErrorKind::AngleDegenerate: return "AngleDegenerateError";
  }
  return "UnknownError";
}

/// Base of every domain error raised by the library. The kind is what the
/// CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& what) : Error(K, what) {}
};

using AdmissibilityError = KindedError<ErrorKind::Admissibility>;
using DimensionError = KindedError<ErrorKind::Dimension>;
using NonFiniteError = KindedError<ErrorKind::NonFinite>;
using InvalidArgumentError = KindedError<ErrorKind::InvalidArgument>;
using DegenerateLineError = KindedError<ErrorKind::DegenerateLine>;
using CollinearPointsError = KindedError<ErrorKind::CollinearPoints>;
using DegenerateAngleError = KindedError<ErrorKind::DegenerateAngle>;
using InvalidTriangleError = KindedError<ErrorKind::InvalidTriangle>;
using NoSuchTriangleError = KindedError<ErrorKind::NoSuchTriangle>;
using NotRightTriangleError = KindedError<ErrorKind::NotRightTriangle>;
using AngleDegenerateError = KindedError<ErrorKind::AngleDegenerate>;

}  // namespace gyrokin
