#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/cli.hpp"
#include "cli/input.hpp"
#include "cli/report.hpp"
#include "gyrokin/gyrokin.hpp"

namespace gyrokin::cli {

namespace {

using V = BetaVector<double>;

struct Options {
  std::string format = "table";
  std::optional<std::string> units;
  std::optional<std::string> c_value;
  std::string unit = "rad";
  std::optional<std::string> out_unit;
  std::vector<std::string> tolerances;

  std::string u, v, w, r, a, b, c;
  std::string mode, sides, angles;
  std::string model, speed;
  std::optional<std::string> theta_s, theta_e, p_s, p_e;
  std::optional<std::size_t> sweep;
  std::string in;
};

struct Config {
  double c = 1.0;
  std::string units = "natural";
  AngleUnit in = AngleUnit::Rad;
  AngleUnit out = AngleUnit::Rad;
  Tolerances tol = kDefaultTolerances;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Table;
}

double positive_c(const std::string& s, const char* source) {
  const double c = parse_number(s);
  if (!(c > 0.0) || !std::isfinite(c)) throw InputError(std::string(source) + " must be a positive number");
  return c;
}

// --c-value, then --units, then GYROKIN_C, then 1.
Config resolve(const Options& o, const Environment& env) {
  Config cfg;
  if (o.units) {
    if (*o.units == "si") cfg.c = kSpeedOfLightSI;
    else if (*o.units == "natural") cfg.c = 1.0;
    else throw InputError("unknown units '" + *o.units + "' (expected natural or si)");
    cfg.units = *o.units;
  } else if (env.gyrokin_c) {
    cfg.c = positive_c(*env.gyrokin_c, "GYROKIN_C");
    cfg.units = "custom";
  }
  if (o.c_value) {
    cfg.c = positive_c(*o.c_value, "--c-value");
    cfg.units = "custom";
  }
  cfg.in = parse_angle_unit(o.unit);
  cfg.out = o.out_unit ? parse_angle_unit(*o.out_unit) : cfg.in;
  for (const auto& t : o.tolerances) apply_tolerance(cfg.tol, t);
  return cfg;
}

Row row(const Vector<double>& x, double scale = 1.0) {
  Row r(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) r[static_cast<std::size_t>(i)] = x[i] * scale;
  return r;
}

std::vector<Row> rows(const Matrix<double>& m) {
  std::vector<Row> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(row(m.row(i).transpose()));
  return out;
}

double max_diff(const V& x, const V& y) { return (x.coords() - y.coords()).cwiseAbs().maxCoeff(); }

Report base_report(const std::string& op, const Config& cfg) {
  Report r;
  r.op = op;
  r.input("c_value", cfg.c);
  return r;
}

void vector_result(Report& r, const V& x, const Config& cfg) {
  r.add("vector", row(x.coords(), cfg.c)).add("norm", x.norm() * cfg.c).add("gamma", gamma(x).value());
}

V velocity(const std::string& s, const Config& cfg) { return parse_velocity(s, cfg.c); }

Report cmd_binary(const std::string& op, const Options& o, const Config& cfg) {
  const V u = velocity(o.u, cfg), v = velocity(o.v, cfg);
  Report r = base_report(op, cfg);
  r.input("u", row(u.coords(), cfg.c)).input("v", row(v.coords(), cfg.c));
  if (op == "add") {
    const V x = einstein_add(u, v);
    vector_result(r, x, cfg);
    const double expect = gamma_of_sum(u, v);
    r.check("gamma_identity", std::abs(gamma(x).value() - expect) / expect);
  } else if (op == "sub") {
    const V x = einstein_sub(u, v);
    vector_result(r, x, cfg);
    r.check("left_cancellation", max_diff(einstein_add(-u, x), -v));
  } else {
    const V x = coadd(u, v);
    vector_result(r, x, cfg);
    r.check("commutativity", max_diff(x, coadd(v, u)));
  }
  return r;
}

Report cmd_gyr(const Options& o, const Config& cfg) {
  const V u = velocity(o.u, cfg), v = velocity(o.v, cfg);
  require_same_dimension(u, v, "gyr");
  const auto g = gyration(u, v);
  Report r = base_report("gyr", cfg);
  r.input("u", row(u.coords(), cfg.c)).input("v", row(v.coords(), cfg.c));
  std::optional<V> w;
  if (!o.w.empty()) {
    w = velocity(o.w, cfg);
    require_same_dimension(u, *w, "gyr");
    r.input("w", row(w->coords(), cfg.c));
    vector_result(r, g(*w), cfg);
  }
  const Matrix<double> m = g.matrix();
  if (u.dim() <= 3) r.add("matrix", rows(m));
  r.add("rotation_angle", from_radians(g.rotation_angle(), cfg.out));
  r.add("angle_unit", std::string(angle_unit_name(cfg.out)));
  const Eigen::Index n = u.dim();
  r.check("orthogonality", (m.transpose() * m - Matrix<double>::Identity(n, n)).cwiseAbs().maxCoeff());
  if (w) r.check("definitional", max_diff(g(*w), gyration_definitional(u, v, *w)));
  return r;
}

Report cmd_scale(const Options& o, const Config& cfg) {
  const double k = parse_number(o.r);
  const V v = velocity(o.v, cfg);
  Report r = base_report("scale", cfg);
  r.input("r", k).input("v", row(v.coords(), cfg.c));
  vector_result(r, scalar_mul(k, v), cfg);
  return r;
}

Report cmd_distance(const Options& o, const Config& cfg) {
  const V a = velocity(o.a, cfg), b = velocity(o.b, cfg);
  Report r = base_report("distance", cfg);
  r.input("a", row(a.coords(), cfg.c)).input("b", row(b.coords(), cfg.c));
  const V x = einstein_add(-a, b);
  vector_result(r, x, cfg);
  r.add("distance", gyrodistance(a, b) * cfg.c);
  r.check("symmetry", std::abs(gyrodistance(a, b) - gyrodistance(b, a)));
  return r;
}

Report cmd_midpoint(const Options& o, const Config& cfg) {
  const V a = velocity(o.a, cfg), b = velocity(o.b, cfg);
  Report r = base_report("midpoint", cfg);
  r.input("a", row(a.coords(), cfg.c)).input("b", row(b.coords(), cfg.c));
  const V m = gyromidpoint(a, b);
  vector_result(r, m, cfg);
  r.check("via_line", max_diff(m, gyromidpoint_via_line(a, b)));
  r.check("via_coadd", max_diff(m, gyromidpoint_via_coadd(a, b)));
  return r;
}

Report cmd_parallelogram(const Options& o, const Config& cfg) {
  const V a = velocity(o.a, cfg), b = velocity(o.b, cfg), c = velocity(o.c, cfg);
  Report r = base_report("parallelogram", cfg);
  r.input("a", row(a.coords(), cfg.c)).input("b", row(b.coords(), cfg.c)).input("c", row(c.coords(), cfg.c));
  const V d = gyroparallelogram_fourth(a, b, c, cfg.tol);
  vector_result(r, d, cfg);
  r.check("diagonal_midpoints", max_diff(gyromidpoint(a, d), gyromidpoint(b, c)));
  return r;
}

// C at the origin, A on the x axis, B at gyroangle gamma from it.
Gyrotriangle<double> realize(const SideLengths<double>& s, const SideGammas<double>& g,
                             const TriangleAngles<double>& t) {
  const V C = V::zero(2);
  const V A{s.b, 0.0};
  const V B{s.a * std::cos(t.gamma), s.a * std::sin(t.gamma)};
  return {A, B, C, s, g, t};
}

Report cmd_triangle(const Options& o, const Config& cfg) {
  Report r = base_report("triangle", cfg);
  r.input("mode", o.mode);
  Gyrotriangle<double> tri{V::zero(2), V::zero(2), V::zero(2), {}, {}, {}};
  auto three = [](const std::vector<double>& x, const char* what) {
    if (x.size() != 3) throw InputError(std::string(what) + " needs exactly three values");
    return x;
  };
  if (o.mode == "sss") {
    if (o.sides.empty()) throw InputError("--mode sss requires --sides");
    const auto x = three(parse_speeds(o.sides, cfg.c), "--sides");
    const SideLengths<double> s{x[0], x[1], x[2]};
    r.input("sides", Row{s.a * cfg.c, s.b * cfg.c, s.c * cfg.c});
    const auto g = gammas_from_sides(s);
    tri = realize(s, g, sss_to_aaa(g, cfg.tol));
  } else if (o.mode == "aaa") {
    if (o.angles.empty()) throw InputError("--mode aaa requires --angles");
    const auto x = three(parse_angles(o.angles, cfg.in), "--angles");
    const TriangleAngles<double> t{x[0], x[1], x[2]};
    r.input("angles", Row{from_radians(t.alpha, cfg.out), from_radians(t.beta, cfg.out), from_radians(t.gamma, cfg.out)});
    const auto g = aaa_to_sss(t, cfg.tol);
    tri = realize(sides_from_gammas(g), g, t);
  } else if (o.mode == "vertices") {
    if (o.a.empty() || o.b.empty() || o.c.empty()) throw InputError("--mode vertices requires --a, --b and --c");
    const V A = velocity(o.a, cfg), B = velocity(o.b, cfg), C = velocity(o.c, cfg);
    r.input("a", row(A.coords(), cfg.c)).input("b", row(B.coords(), cfg.c)).input("c", row(C.coords(), cfg.c));
    tri = triangle_from_vertices(A, B, C, cfg.tol);
  } else {
    throw InputError("--mode must be sss, aaa or vertices");
  }

  const auto ang = [&](double x) { return from_radians(x, cfg.out); };
  r.add("side_a", tri.sides.a * cfg.c).add("side_b", tri.sides.b * cfg.c).add("side_c", tri.sides.c * cfg.c);
  r.add("gamma_a", tri.gammas.a).add("gamma_b", tri.gammas.b).add("gamma_c", tri.gammas.c);
  r.add("alpha", ang(tri.angles.alpha)).add("beta", ang(tri.angles.beta)).add("gamma", ang(tri.angles.gamma));
  r.add("defect", ang(tri.angles.defect()));
  r.add("angle_unit", std::string(angle_unit_name(cfg.out)));

  r.check("triangle_quantity", triangle_quantity(tri.gammas));
  const auto ratios = law_of_gyrosines_ratios(tri.angles, tri.gammas);
  const double hi = std::max({ratios.a, ratios.b, ratios.c}), lo = std::min({ratios.a, ratios.b, ratios.c});
  r.check("law_of_gyrosines", (hi - lo) / hi);
  if (std::abs(tri.angles.gamma - std::numbers::pi / 2) <= cfg.tol.right_angle) {
    const auto rep = right_triangle_relations(tri, cfg.tol);
    r.add("right_angle_at", std::string("C"));
    r.check("einstein_pythagoras", rep.einstein_pythagoras);
    r.check("pythagorean_first", rep.pythagorean_first);
    r.check("pythagorean_second", rep.pythagorean_second);
    r.check("max_right_identity", rep.max_identity_residual());
    r.add("euclidean_pythagorean", rep.euclidean_pythagorean);
  }
  return r;
}

double optional_speed(const std::optional<std::string>& s, const Config& cfg) {
  return s ? parse_speed(*s, cfg.c) : 1.0;
}

Report cmd_aberration(const Options& o, const Config& cfg) {
  if (o.model != "classical" && o.model != "relativistic" && o.model != "stellar") {
    throw InputError("--model must be classical, relativistic or stellar");
  }
  if (o.speed.empty()) throw InputError("aberration requires --v");
  const bool stellar = o.model == "stellar";
  const double v = parse_speed(o.speed, cfg.c);
  if (stellar && ((o.p_s && parse_speed(*o.p_s, cfg.c) != 1.0) || (o.p_e && parse_speed(*o.p_e, cfg.c) != 1.0))) {
    throw InputError("the stellar model fixes the particle speed at c");
  }
  Report r = base_report("aberration", cfg);
  r.input("model", o.model).input("v", v * cfg.c);
  const auto ang = [&](double x) { return from_radians(x, cfg.out); };

  if (o.sweep) {
    const double p = stellar ? 1.0 : optional_speed(o.p_s, cfg);
    r.input("p_s", p * cfg.c).input("samples", double(*o.sweep));
    r.table.columns = {"theta_s", "theta_e_classical", "theta_e_relativistic", "offset_arcsec"};
    for (const auto& row : aberration_sweep(v, p, *o.sweep)) {
      r.table.rows.push_back({ang(row.theta_s), ang(row.theta_e_classical), ang(row.theta_e_relativistic),
                              row.offset_arcsec});
    }
    r.add("angle_unit", std::string(angle_unit_name(cfg.out)));
    return r;
  }

  if (o.theta_s.has_value() == o.theta_e.has_value()) {
    throw InputError("aberration needs exactly one of --theta-s and --theta-e (or --sweep)");
  }
  const bool classical = o.model == "classical";
  AberrationResult<double> res{};
  double roundtrip = 0;
  if (o.theta_s) {
    const double ts = parse_angle(*o.theta_s, cfg.in);
    const double ps = stellar ? 1.0 : optional_speed(o.p_s, cfg);
    r.input("theta_s", ang(ts)).input("p_s", ps * cfg.c);
    res = classical ? solve_classical(ts, v, ps) : solve_relativistic(ts, v, ps);
    const double back = classical ? classical_aberration_inv(res.theta_e, v, res.p_e)
                                  : relativistic_aberration_inv(res.theta_e, v, res.p_e);
    roundtrip = std::abs(back - ts);
  } else {
    const double te = parse_angle(*o.theta_e, cfg.in);
    const double pe = stellar ? 1.0 : optional_speed(o.p_e, cfg);
    r.input("theta_e", ang(te)).input("p_e", pe * cfg.c);
    res = classical ? solve_classical_inv(te, v, pe) : solve_relativistic_inv(te, v, pe);
    const double fwd = classical ? classical_aberration(res.theta_s, v, res.p_s)
                                 : relativistic_aberration(res.theta_s, v, res.p_s);
    roundtrip = std::abs(fwd - te);
  }
  r.add("theta_s", ang(res.theta_s)).add("theta_e", ang(res.theta_e)).add("offset", ang(res.offset));
  r.add("p_s", res.p_s * cfg.c).add("p_e", res.p_e * cfg.c);
  r.add("angle_unit", std::string(angle_unit_name(cfg.out)));
  r.check("roundtrip", roundtrip);
  return r;
}

Report cmd_mass(const Options& o, const Config& cfg, const Environment& env) {
  if (o.in.empty()) throw InputError("mass requires --in <file> or --in -");
  std::optional<ParticleSystem<double>> sys;
  if (o.in == "-") {
    sys = read_particles(env.input ? *env.input : std::cin, cfg.c);
  } else {
    std::ifstream f(o.in);
    if (!f) throw InputError("cannot open particle file '" + o.in + "'");
    sys = read_particles(f, cfg.c);
  }
  const auto d = decompose(*sys);
  Report r = base_report("mass", cfg);
  r.input("file", o.in).input("particles", double(sys->size()));
  r.add("m_newton", d.m_newton).add("m_dark", d.m_dark).add("m0", d.m0);
  r.add("v0", row(d.v0.coords(), cfg.c)).add("gamma0", d.gamma0).add("energy", total_energy(*sys));
  r.check("four_momentum", four_momentum_residual(*sys, d));
  return r;
}

void build(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--units", o.units, "natural (c = 1) or si (c = 299792458 m/s)");
  app.add_option("--c-value", o.c_value, "Speed of light in input units; overrides --units and GYROKIN_C");
  app.add_option("--unit", o.unit, "Unit of input angles: rad, deg or arcsec");
  app.add_option("--out", o.out_unit, "Unit of output angles; defaults to --unit");
  app.add_option("--tol", o.tolerances, "Tolerance override name=value (repeatable)");

  auto pair = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--u", o.u, "First velocity")->required();
    s->add_option("--v", o.v, "Second velocity")->required();
    return s;
  };
  pair("add", "Einstein addition u (+) v");
  pair("sub", "Einstein subtraction u (-) v");
  pair("coadd", "Einstein coaddition u [+] v");
  pair("gyr", "Gyration gyr[u,v], optionally applied to --w")->add_option("--w", o.w, "Vector to rotate");

  auto* scale = app.add_subcommand("scale", "Scalar multiplication r (.) v");
  scale->add_option("--r", o.r, "Real scalar")->required();
  scale->add_option("--v", o.v, "Velocity")->required();

  for (const char* name : {"distance", "midpoint"}) {
    auto* s = app.add_subcommand(name, name == std::string("distance") ? "Gyrodistance |(-)a (+) b|" : "Gyromidpoint");
    s->add_option("--a", o.a, "First point")->required();
    s->add_option("--b", o.b, "Second point")->required();
  }

  auto* par = app.add_subcommand("parallelogram", "Fourth vertex D = (b [+] c) (-) a");
  par->add_option("--a", o.a)->required();
  par->add_option("--b", o.b)->required();
  par->add_option("--c", o.c)->required();

  auto* tri = app.add_subcommand("triangle", "Gyrotriangle from sides, angles or vertices");
  tri->add_option("--mode", o.mode, "sss, aaa or vertices")->required();
  tri->add_option("--sides", o.sides, "Side gyrolengths a,b,c");
  tri->add_option("--angles", o.angles, "Gyroangles alpha,beta,gamma");
  tri->add_option("--a", o.a, "Vertex A");
  tri->add_option("--b", o.b, "Vertex B");
  tri->add_option("--c", o.c, "Vertex C");

  auto* ab = app.add_subcommand("aberration", "Particle and stellar aberration");
  ab->add_option("--model", o.model, "classical, relativistic or stellar")->required();
  ab->add_option("--v", o.speed, "Relative speed of S with respect to E");
  ab->add_option("--theta-s", o.theta_s, "Angle seen from S");
  ab->add_option("--theta-e", o.theta_e, "Angle seen from E");
  ab->add_option("--p-s", o.p_s, "Particle speed relative to S (default c)");
  ab->add_option("--p-e", o.p_e, "Particle speed relative to E (default c)");
  ab->add_option("--sweep", o.sweep, "Tabulate N values of theta_s across (0, pi)");

  auto* mass = app.add_subcommand("mass", "Invariant, Newtonian and dark mass of a particle system");
  mass->add_option("--in", o.in, "Particle file, or - for standard input")->required();
}

}  // namespace

Environment process_environment() {
  Environment env;
  if (const char* c = std::getenv("GYROKIN_C")) env.gyrokin_c = c;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  Options o;
  CLI::App app{"Einstein gyrovector space computations", "gyrokin"};
  build(app, o);
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return 1;
  }

  const OutputFormat format = parse_format(o.format);
  try {
    const Config cfg = resolve(o, env);
    const std::string op = app.get_subcommands().front()->get_name();
    Report report;
    if (op == "add" || op == "sub" || op == "coadd") report = cmd_binary(op, o, cfg);
    else if (op == "gyr") report = cmd_gyr(o, cfg);
    else if (op == "scale") report = cmd_scale(o, cfg);
    else if (op == "distance") report = cmd_distance(o, cfg);
    else if (op == "midpoint") report = cmd_midpoint(o, cfg);
    else if (op == "parallelogram") report = cmd_parallelogram(o, cfg);
    else if (op == "triangle") report = cmd_triangle(o, cfg);
    else if (op == "aberration") report = cmd_aberration(o, cfg);
    else report = cmd_mass(o, cfg, env);
    report.input("units", cfg.units);
    render(report, format, out);
    return 0;
  } catch (const InputError& e) {
    render_error("InputError", e.what(), format, err);
    return 1;
  } catch (const Error& e) {
    render_error(std::string(error_kind_name(e.kind())), e.what(), format, err);
    return 2;
  }
}

}  // namespace gyrokin::cli
