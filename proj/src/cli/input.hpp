#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyrokin/mass.hpp"
#include "gyrokin/tolerances.hpp"

namespace gyrokin::cli {

/// Malformed input: bad number syntax, unknown units, malformed particle
/// files. Reported with exit code 1, unlike domain errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AngleUnit { Rad, Deg, Arcsec };

inline constexpr double kSpeedOfLightSI = 299792458.0;

AngleUnit parse_angle_unit(const std::string& s);
const char* angle_unit_name(AngleUnit u);

double to_radians(double value, AngleUnit u);
double from_radians(double radians, AngleUnit u);

/// Strict decimal parse: the whole string must be consumed.
double parse_number(const std::string& s);

/// A speed in c_value units, or a fraction of c with a trailing `c`
/// (`0.6c`). Returns the dimensionless speed.
double parse_speed(const std::string& s, double c_value);

/// Comma-separated speeds, each divided by c_value.
std::vector<double> parse_speeds(const std::string& s, double c_value);

/// Comma-separated plain numbers.
std::vector<double> parse_numbers(const std::string& s);

/// An angle in `unit`, or with an explicit rad/deg/arcsec suffix. Returns radians.
double parse_angle(const std::string& s, AngleUnit unit);
std::vector<double> parse_angles(const std::string& s, AngleUnit unit);

BetaVector<double> parse_velocity(const std::string& s, double c_value);

/// `name=value` override of one field of Tolerances.
void apply_tolerance(Tolerances& tol, const std::string& assignment);

/// Particle file: CSV lines `mass,vx[,vy...]` with `#` comments, or JSON
/// records {"mass": m, "velocity": [...]} (a bare array or {"particles": [...]}).
/// Velocities are in c_value units.
ParticleSystem<double> read_particles(std::istream& in, double c_value);

}  // namespace gyrokin::cli
