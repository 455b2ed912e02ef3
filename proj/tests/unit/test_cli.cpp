#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "cli/input.hpp"
#include "cli/report.hpp"
#include "cli_golden.hpp"
#include "gyrokin/gyrokin.hpp"

using namespace gyrokin;
using gyrokin::cli::format_number;
using gyrokin::cli::format_row;
using gyrokin::testing::run_cli;

TEST_SUITE("cli golden") {
  TEST_CASE("documented examples") {
    for (const auto& g : gyrokin::testing::golden_cases()) {
      CAPTURE(g.name);
      const auto r = run_cli(g.args, g.stdin_text);
      CHECK(r.code == g.code);
      CHECK(r.out == g.out);
      CHECK(r.err.find(g.err_contains) != std::string::npos);
      if (g.code == 0) CHECK(r.err.empty());
    }
  }
}

TEST_SUITE("cli") {
  TEST_CASE("number formatting") {
    CHECK(format_number(0.48) == "0.48");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_number(2.5e-20) == "2.5e-20");
    CHECK(format_row({0.6, 0.48, 0.0}) == "0.6,0.48,0");
  }

  TEST_CASE("output is the library result, formatted") {
    const BetaVector<> u{0.31, -0.27, 0.5}, v{-0.44, 0.12, 0.61};
    const auto w = einstein_add(u, v);
    const auto r = run_cli({"add", "--u", "0.31,-0.27,0.5", "--v", "-0.44,0.12,0.61"});
    REQUIRE(r.code == 0);
    const std::string head = "vector: " + format_row({w[0], w[1], w[2]}) + "\nnorm: " + format_number(w.norm()) +
                             "\ngamma: " + format_number(gamma(w).value()) + "\n";
    CHECK(r.out.substr(0, head.size()) == head);

    const auto m = scalar_mul(-1.7, v);
    const auto s = run_cli({"scale", "--r", "-1.7", "--v", "-0.44,0.12,0.61"});
    CHECK(s.out.find("vector: " + format_row({m[0], m[1], m[2]}) + "\n") == 0);

    const double d = gyrodistance(u, v);
    const auto dist = run_cli({"distance", "--a", "0.31,-0.27,0.5", "--b", "-0.44,0.12,0.61"});
    CHECK(dist.out.find("distance: " + format_number(d) + "\n") != std::string::npos);
  }

  TEST_CASE("json schema carries op, inputs, result and checks") {
    const auto r = run_cli({"gyr", "--u", "0.6,0,0", "--v", "0,0.6,0", "--w", "0.1,0.2,0.3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["op"] == "gyr");
    CHECK(j["inputs"]["u"].size() == 3);
    CHECK(j["result"]["matrix"].size() == 3);
    CHECK(j["result"]["rotation_angle"].get<double>() < 0.0);
    CHECK(j["checks"]["orthogonality"].get<double>() < 1e-12);
    CHECK(j["checks"]["definitional"].get<double>() < 1e-12);

    const auto e = run_cli({"add", "--u", "1.2,0", "--v", "0,0", "--format", "json"});
    CHECK(e.code == 2);
    CHECK(nlohmann::json::parse(e.err)["error"]["kind"] == "AdmissibilityError");
  }

  TEST_CASE("every vector command runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"sub", "--u", "0.2,0.1", "--v", "-0.3,0.5"},
             {"coadd", "--u", "0.2,0.1", "--v", "-0.3,0.5"},
             {"gyr", "--u", "0.2,0.1", "--v", "-0.3,0.5"},
             {"midpoint", "--a", "0.2,0.1", "--b", "-0.3,0.5"},
             {"parallelogram", "--a", "0.2,0.1", "--b", "-0.3,0.5", "--c", "0.1,-0.6"},
             {"gyr", "--u", "0.2,0.1,0,0", "--v", "0,-0.3,0.5,0.1", "--format", "csv"}}) {
      const auto r = run_cli(args);
      CHECK(r.code == 0);
      CHECK(r.err.empty());
    }
    const auto collinear = run_cli({"parallelogram", "--a", "0.1,0", "--b", "0.2,0", "--c", "-0.4,0"});
    CHECK(collinear.code == 2);
    CHECK(collinear.err.find("CollinearPointsError") == 0);
  }

  TEST_CASE("sss and aaa invocations invert each other") {
    const auto aaa = run_cli({"triangle", "--mode", "aaa", "--angles", "0.5,0.6,0.7", "--format", "json"});
    REQUIRE(aaa.code == 0);
    const auto j = nlohmann::json::parse(aaa.out)["result"];
    const std::string sides = format_number(j["side_a"].get<double>()) + "," +
                              format_number(j["side_b"].get<double>()) + "," + format_number(j["side_c"].get<double>());
    const auto sss = run_cli({"triangle", "--mode", "sss", "--sides", sides, "--format", "json"});
    REQUIRE(sss.code == 0);
    const auto k = nlohmann::json::parse(sss.out)["result"];
    CHECK(k["alpha"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(k["beta"].get<double>() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(k["gamma"].get<double>() == doctest::Approx(0.7).epsilon(1e-12));
  }

  TEST_CASE("SI and natural units agree on pre-scaled inputs") {
    const double c = cli::kSpeedOfLightSI;
    const auto si = run_cli({"aberration", "--model", "relativistic", "--units", "si", "--v", format_number(0.3 * c),
                             "--p-s", format_number(0.8 * c), "--theta-s", "1.1"});
    const auto nat = run_cli({"aberration", "--model", "relativistic", "--units", "natural", "--v", "0.3", "--p-s",
                              "0.8", "--theta-s", "1.1"});
    REQUIRE(si.code == 0);
    auto line = [](const std::string& text, const std::string& key) {
      const auto at = text.find(key + ": ");
      return text.substr(at, text.find('\n', at) - at);
    };
    CHECK(line(si.out, "theta_e") == line(nat.out, "theta_e"));
    CHECK(line(si.out, "offset") == line(nat.out, "offset"));

    const auto si_add = run_cli({"add", "--units", "si", "--u", format_number(0.6 * c) + ",0", "--v", "0," + format_number(0.6 * c)});
    CHECK(line(si_add.out, "gamma") == "gamma: 1.5625");
  }

  TEST_CASE("c precedence: --c-value, then --units, then GYROKIN_C") {
    const std::vector<std::string> base{"add", "--u", "3,0", "--v", "0,3"};
    CHECK(run_cli({"add", "--u", "6,0", "--v", "0,6"}, "", std::string("10")).out.find("vector: 6,4.8\n") == 0);
    auto with = base;
    with.insert(with.end(), {"--c-value", "5"});
    CHECK(run_cli(with, "", std::string("10")).out.find("vector: 3,2.4\n") == 0);
    CHECK(run_cli({"add", "--u", "0.6c,0", "--v", "0,0.6c", "--c-value", "5"}).out.find("vector: 3,2.4\n") == 0);
    CHECK(run_cli(base, "", std::string("-1")).code == 1);
    CHECK(run_cli({"add", "--u", "0.3,0", "--v", "0,0.3", "--units", "natural"}, "", std::string("10")).out.find("vector: 0.3,") == 0);
  }

  TEST_CASE("sweep table") {
    const auto r = run_cli({"aberration", "--model", "relativistic", "--v", "0.5", "--p-s", "0.8", "--sweep", "4"});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string header, row;
    std::getline(is, header);
    CHECK(header == "theta_s,theta_e_classical,theta_e_relativistic,offset_arcsec");
    int n = 0;
    while (std::getline(is, row)) ++n;
    CHECK(n == 4);
    const auto first = aberration_sweep(0.5, 0.8, std::size_t{4}).front();
    CHECK(r.out.find("\n" + format_number(first.theta_s) + "," + format_number(first.theta_e_classical) + "," +
                     format_number(first.theta_e_relativistic) + "," + format_number(first.offset_arcsec) + "\n") !=
          std::string::npos);
  }

  TEST_CASE("particle files: JSON records, file paths, errors") {
    const auto j = run_cli({"mass", "--in", "-"}, R"([{"mass": 1, "velocity": [0.6, 0, 0]}, {"mass": 2, "velocity": [0, 0.6, 0]}])");
    REQUIRE(j.code == 0);
    CHECK(j.out.find("m0: 3.35410196624968\n") != std::string::npos);
    CHECK(j.out.find("v0: 0.2,0.4,0\n") != std::string::npos);
    CHECK(run_cli({"mass", "--in", "-"}, "[{\"mass\": 1}]").code == 1);
    CHECK(run_cli({"mass", "--in", "-"}, "1,0.1\n1,0.1,0.2\n").code == 1);
    CHECK(run_cli({"mass", "--in", "-"}, "0,0.1\n").code == 2);
    CHECK(run_cli({"mass", "--in", "-"}, "# nothing\n").code == 1);
    CHECK(run_cli({"mass", "--in", "/nonexistent/particles.csv"}).code == 1);
  }

  TEST_CASE("aberration argument checks") {
    CHECK(run_cli({"aberration", "--model", "stellar", "--v", "0.1"}).code == 1);
    CHECK(run_cli({"aberration", "--model", "stellar", "--v", "0.1", "--theta-s", "1", "--theta-e", "1"}).code == 1);
    CHECK(run_cli({"aberration", "--model", "stellar", "--v", "0.1", "--theta-s", "1", "--p-s", "0.5"}).code == 1);
    CHECK(run_cli({"aberration", "--model", "other", "--v", "0.1", "--theta-s", "1"}).code == 1);
    const auto inv = run_cli({"aberration", "--model", "classical", "--v", "0.6", "--theta-e", "1.03037682652431",
                              "--p-e", "1.16619037896906"});
    REQUIRE(inv.code == 0);
    CHECK(inv.out.find("theta_s: 1.57079632679") == 0);
  }
}
