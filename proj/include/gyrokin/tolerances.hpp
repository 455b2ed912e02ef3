#pragma once

namespace gyrokin {

// Squared norms above 1 - kBallMargin are rejected.
inline constexpr double kBallMargin = 1e-12;

// Components below this magnitude count as the identity element.
inline constexpr double kIdentityEpsilon = 1e-300;

struct Tolerances {
  double component = 1e-10;        // absolute, per component
  double gamma_relative = 1e-12;   // relative, on gamma factors
  double clamp = 1e-12;            // cosine / Q residue snapped to the boundary
  double collinear_area = 1e-12;   // ambient triangle area
  double degenerate_length = 1e-14;
  double degenerate_sine = 1e-14;
  double angle_sum = 1e-12;        // zero-defect guard for AAA input
  double right_angle = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace gyrokin
