#include "cli/input.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace gyrokin::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <typename F>
auto map_list(const std::string& s, F f) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(f(part));
  if (out.empty()) throw InputError("empty list");
  return out;
}

Particle<double> make_particle(double mass, const std::vector<double>& v, double c_value) {
  Vector<double> coords(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) coords[static_cast<Eigen::Index>(i)] = v[i] / c_value;
  return Particle<double>(mass, BetaVector<double>(coords));
}

// Tags a domain error with its position in the particle file.
[[noreturn]] void rethrow_at(const Error& e, const std::string& where) {
  throw Error(e.kind(), where + ": " + e.what());
}

ParticleSystem<double> read_json_particles(const std::string& text, double c_value) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("particle file: ") + e.what());
  }
  if (j.is_object() && j.contains("particles")) j = j["particles"];
  if (!j.is_array()) throw InputError("particle file: expected an array of particle records");
  std::vector<Particle<double>> ps;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& rec = j[k];
    const std::string where = "particle file: record " + std::to_string(k + 1);
    if (!rec.is_object() || !rec.contains("mass") || !rec.contains("velocity") || !rec["mass"].is_number() ||
        !rec["velocity"].is_array() || rec["velocity"].empty()) {
      throw InputError(where + ": expected {\"mass\": number, \"velocity\": [numbers]}");
    }
    std::vector<double> v;
    for (const auto& c : rec["velocity"]) {
      if (!c.is_number()) throw InputError(where + ": velocity components must be numbers");
      v.push_back(c.get<double>());
    }
    if (!ps.empty() && static_cast<Eigen::Index>(v.size()) != ps.front().velocity().dim()) {
      throw InputError(where + ": velocity dimension differs from the first record");
    }
    try {
      ps.push_back(make_particle(rec["mass"].get<double>(), v, c_value));
    } catch (const Error& e) {
      rethrow_at(e, where);
    }
  }
  if (ps.empty()) throw InputError("particle file: no particles");
  return ParticleSystem<double>(std::move(ps));
}

}  // namespace

AngleUnit parse_angle_unit(const std::string& s) {
  if (s == "rad") return AngleUnit::Rad;
  if (s == "deg") return AngleUnit::Deg;
  if (s == "arcsec") return AngleUnit::Arcsec;
  throw InputError("unknown angle unit '" + s + "' (expected rad, deg or arcsec)");
}

const char* angle_unit_name(AngleUnit u) {
  switch (u) {
    case AngleUnit::Rad: return "rad";
    case AngleUnit::Deg: return "deg";
    case AngleUnit::Arcsec: return "arcsec";
  }
  return "rad";
}

double to_radians(double value, AngleUnit u) {
  switch (u) {
    case AngleUnit::Rad: return value;
    case AngleUnit::Deg: return value * (std::numbers::pi / 180.0);
    case AngleUnit::Arcsec: return value * (std::numbers::pi / (180.0 * 3600.0));
  }
  return value;
}

double from_radians(double radians, AngleUnit u) {
  switch (u) {
    case AngleUnit::Rad: return radians;
    case AngleUnit::Deg: return radians * (180.0 / std::numbers::pi);
    case AngleUnit::Arcsec: return radians * (180.0 * 3600.0 / std::numbers::pi);
  }
  return radians;
}

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw InputError("expected a number, got an empty string");
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw InputError("malformed number '" + s + "'");
  if (errno == ERANGE && std::isinf(x)) throw InputError("number out of range '" + s + "'");
  return x;
}

double parse_speed(const std::string& raw, double c_value) {
  const std::string s = trim(raw);
  if (ends_with(s, "c")) return parse_number(s.substr(0, s.size() - 1));
  return parse_number(s) / c_value;
}

std::vector<double> parse_speeds(const std::string& s, double c_value) {
  return map_list(s, [c_value](const std::string& p) { return parse_speed(p, c_value); });
}

std::vector<double> parse_numbers(const std::string& s) { return map_list(s, parse_number); }

double parse_angle(const std::string& raw, AngleUnit unit) {
  const std::string s = trim(raw);
  for (AngleUnit u : {AngleUnit::Arcsec, AngleUnit::Deg, AngleUnit::Rad}) {
    const std::string suffix = angle_unit_name(u);
    if (ends_with(s, suffix)) return to_radians(parse_number(s.substr(0, s.size() - suffix.size())), u);
  }
  return to_radians(parse_number(s), unit);
}

std::vector<double> parse_angles(const std::string& s, AngleUnit unit) {
  return map_list(s, [unit](const std::string& p) { return parse_angle(p, unit); });
}

BetaVector<double> parse_velocity(const std::string& s, double c_value) {
  const std::vector<double> v = parse_speeds(s, c_value);
  return BetaVector<double>(Eigen::Map<const Vector<double>>(v.data(), static_cast<Eigen::Index>(v.size())));
}

void apply_tolerance(Tolerances& tol, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw InputError("tolerance override must read name=value");
  const std::string name = trim(assignment.substr(0, eq));
  const double value = parse_number(assignment.substr(eq + 1));
  if (!(value >= 0.0) || !std::isfinite(value)) throw InputError("tolerance '" + name + "' must be finite and >= 0");
  if (name == "component") tol.component = value;
  else if (name == "gamma_relative") tol.gamma_relative = value;
  else if (name == "clamp") tol.clamp = value;
  else if (name == "collinear_area") tol.collinear_area = value;
  else if (name == "degenerate_length") tol.degenerate_length = value;
  else if (name == "degenerate_sine") tol.degenerate_sine = value;
  else if (name == "angle_sum") tol.angle_sum = value;
  else if (name == "right_angle") tol.right_angle = value;
  else throw InputError("unknown tolerance '" + name + "'");
}

ParticleSystem<double> read_particles(std::istream& in, double c_value) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    return read_json_particles(text, c_value);
  }

  std::vector<Particle<double>> ps;
  std::istringstream lines(text);
  std::string line;
  for (int lineno = 1; std::getline(lines, line); ++lineno) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const std::string where = "particle file line " + std::to_string(lineno);
    std::vector<double> fields;
    try {
      fields = parse_numbers(line);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    if (fields.size() < 2) throw InputError(where + ": expected mass,vx[,vy,...]");
    const std::vector<double> v(fields.begin() + 1, fields.end());
    if (!ps.empty() && static_cast<Eigen::Index>(v.size()) != ps.front().velocity().dim()) {
      throw InputError(where + ": velocity dimension differs from the first particle");
    }
    try {
      ps.push_back(make_particle(fields.front(), v, c_value));
    } catch (const Error& e) {
      rethrow_at(e, where);
    }
  }
  if (ps.empty()) throw InputError("particle file: no particles");
  return ParticleSystem<double>(std::move(ps));
}

}  // namespace gyrokin::cli
