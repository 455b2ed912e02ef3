#include <doctest.h>

#include <cmath>

#include "gyrokin/gyrogroup.hpp"
#include "gyrokin/gyrovector_space.hpp"
#include "sampling.hpp"

using namespace gyrokin;
using gyrokin::testing::BallSampler;
using gyrokin::testing::max_abs_diff;

namespace {
const BetaVector<> kU{0.6, 0.0, 0.0};
const BetaVector<> kV{0.0, 0.6, 0.0};
}  // namespace

TEST_SUITE("beta_vector") {
  TEST_CASE("admissibility is enforced at construction") {
    CHECK_NOTHROW(BetaVector<>{0.999, 0.0});
    CHECK_THROWS_AS(BetaVector<>({1.0, 0.0}), AdmissibilityError);
    CHECK_THROWS_AS(BetaVector<>({0.8, 0.6}), AdmissibilityError);
    // |v|^2 = 1 - 1e-13 sits inside the rejected margin
    CHECK_THROWS_AS(BetaVector<>({std::sqrt(1.0 - 1e-13)}), AdmissibilityError);
    CHECK_THROWS_AS(BetaVector<>({NAN}), NonFiniteError);
    CHECK_THROWS_AS(BetaVector<>(Vector<double>(0)), DimensionError);
  }

  TEST_CASE("tiny components compare equal to the identity") {
    const BetaVector<> tiny{1e-301, -0.0, 0.0};
    CHECK(tiny.is_identity());
    CHECK(tiny == BetaVector<>::zero(3));
    CHECK_FALSE(BetaVector<>({1e-299, 0.0, 0.0}) == BetaVector<>::zero(3));
  }
}

TEST_SUITE("gamma") {
  TEST_CASE("fixture values") {
    CHECK(gamma(BetaVector<>::zero(3)).value() == 1.0);
    CHECK(gamma(kU).value() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(gamma(BetaVector<>{0.48, 0.64}).value() == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  }

  TEST_CASE("reciprocal identity (g^2 - 1)/g^2 = |v|^2") {
    BallSampler s(11);
    for (int i = 0; i < 200; ++i) {
      const auto v = s.point(3, 0.999);
      CHECK(gamma(v).squared_speed() == doctest::Approx(v.squared_norm()).epsilon(1e-10));
    }
  }

  TEST_CASE("gamma_minus_one keeps precision for slow velocities") {
    const BetaVector<> slow{1e-9};
    CHECK(gamma_minus_one(slow) == doctest::Approx(0.5e-18).epsilon(1e-12));
  }
}

TEST_SUITE("einstein_add") {
  TEST_CASE("examples") {
    const auto v = BetaVector<>{0.1, -0.2, 0.3};
    CHECK(max_abs_diff(einstein_add(BetaVector<>::zero(3), v), v) == 0.0);

    const auto half = BetaVector<>{0.5, 0.0, 0.0};
    CHECK(max_abs_diff(einstein_add(half, half), BetaVector<>{0.8, 0.0, 0.0}) < 1e-15);

    const auto w = einstein_add(kU, kV);
    CHECK(max_abs_diff(w, BetaVector<>{0.6, 0.48, 0.0}) < 1e-15);
    CHECK(gamma(w).value() == doctest::Approx(1.5625).epsilon(1e-14));
    CHECK(gamma_of_sum(kU, kV) == doctest::Approx(1.5625).epsilon(1e-15));
  }

  TEST_CASE("parallel velocities follow the scalar law") {
    BallSampler s(5);
    for (int i = 0; i < 100; ++i) {
      const auto d = s.direction(3);
      const double a = s.uniform(-0.95, 0.95), b = s.uniform(-0.95, 0.95);
      const auto sum = einstein_add(BetaVector<>(Vector<double>(a * d)), BetaVector<>(Vector<double>(b * d)));
      CHECK(max_abs_diff(sum.coords(), parallel_add(a, b) * d) < 1e-14);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(einstein_add(kU, BetaVector<>{0.1, 0.1}), DimensionError);
  }

  TEST_CASE("noncommutative but norm symmetric") {
    const auto uv = einstein_add(kU, kV);
    const auto vu = einstein_add(kV, kU);
    CHECK(max_abs_diff(uv, vu) > 0.1);
    CHECK(uv.norm() == doctest::Approx(vu.norm()).epsilon(1e-15));
  }

  TEST_CASE("Newtonian limit: residual against u+v is third order") {
    BallSampler s(17);
    for (int i = 0; i < 20; ++i) {
      const Vector<double> du = s.direction(3), dv = s.direction(3);
      auto residual = [&](double eps) {
        const auto u = BetaVector<>(Vector<double>(eps * du));
        const auto v = BetaVector<>(Vector<double>(eps * dv));
        return (einstein_add(u, v).coords() - (u.coords() + v.coords())).norm();
      };
      const double ratio = residual(1e-2) / residual(0.5e-2);
      CHECK(ratio == doctest::Approx(8.0).epsilon(0.05));
    }
  }
}

TEST_SUITE("einstein_sub") {
  TEST_CASE("examples") {
    CHECK(einstein_sub(kU, kU).norm() < 1e-15);
    const auto lhs = -einstein_add(kU, kV);
    CHECK(max_abs_diff(lhs, einstein_sub(-kU, kV)) < 1e-15);
    CHECK(max_abs_diff(lhs, BetaVector<>{-0.6, -0.48, 0.0}) < 1e-15);
  }

  TEST_CASE("left cancellation") {
    BallSampler s(3);
    for (int i = 0; i < 200; ++i) {
      const auto u = s.point(3, 0.99), v = s.point(3, 0.99);
      CHECK(max_abs_diff(einstein_add(-u, einstein_add(u, v)), v) < 1e-10);
    }
  }
}

TEST_SUITE("gyration") {
  TEST_CASE("trivial cases") {
    const Vector<double> w = Vector<double>::LinSpaced(3, -2.0, 5.0);  // outside the ball on purpose
    CHECK(max_abs_diff(gyration(kU, BetaVector<>::zero(3)).apply(w), w) == 0.0);
    CHECK(max_abs_diff(gyration(BetaVector<>::zero(3), kV).apply(w), w) == 0.0);
    const BetaVector<> p{0.2, 0.3, -0.1};
    const BetaVector<> q{-0.5, -0.75, 0.25};
    CHECK(max_abs_diff(gyration(p, q).apply(w), w) < 1e-15);
  }

  TEST_CASE("closed form on the canonical pair is a rotation in the u,v plane") {
    const auto g = gyration(kU, kV);
    const Matrix<double> m = g.matrix();
    CHECK((m.transpose() * m - Matrix<double>::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(m.determinant() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m(2, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(m(0, 2)) + std::abs(m(1, 2)) + std::abs(m(2, 0)) + std::abs(m(2, 1)) < 1e-16);
    CHECK(g.d() == doctest::Approx(2.5625).epsilon(1e-15));
    // independent check against the definitional triple addition
    const BetaVector<> w{0.1, 0.2, 0.3};
    CHECK(max_abs_diff(g(w), gyration_definitional(kU, kV, w)) < 1e-12);
    // gyr[u,v] turns v(+)u = (0.48, 0.6) into u(+)v = (0.6, 0.48): a turn away from v
    const auto uv = einstein_add(kU, kV), vu = einstein_add(kV, kU);
    const double angle_vu = std::atan2(vu[1], vu[0]);
    const double angle_uv = std::atan2(uv[1], uv[0]);
    CHECK(g.rotation_angle() == doctest::Approx(angle_uv - angle_vu).epsilon(1e-13));
    CHECK(g.rotation_angle() < 0.0);
  }

  TEST_CASE("definitional oracle examples") {
    const BetaVector<> w{0.1, 0.2, 0.3};
    CHECK(max_abs_diff(gyration_definitional(BetaVector<>::zero(3), kV, w), w) < 1e-16);
    CHECK(max_abs_diff(gyration_definitional(kV, kU, gyration_definitional(kU, kV, w)), w) < 1e-15);
  }

  TEST_CASE("inverse and isometry on random generators") {
    BallSampler s(23);
    for (int n = 1; n <= 4; ++n) {
      for (int i = 0; i < 100; ++i) {
        const auto u = s.point(n, 0.99), v = s.point(n, 0.99);
        const auto g = gyration(u, v);
        const Vector<double> a = Vector<double>::Random(n), b = Vector<double>::Random(n);
        CHECK(max_abs_diff(g.inverse().apply(g.apply(a)), a) < 1e-12);
        CHECK(g.apply(a).dot(g.apply(b)) == doctest::Approx(a.dot(b)).epsilon(1e-12));
        CHECK(g.d() > 1.0);
        CHECK(g.d() == doctest::Approx(gamma(einstein_add(u, v)).value() + 1.0).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("dimension one gyrations are trivial") {
    const auto g = gyration(BetaVector<>{0.7}, BetaVector<>{-0.9});
    CHECK(g.apply(Vector<double>::Constant(1, 0.3))[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(g.rotation_angle() == 0.0);
  }
}

TEST_SUITE("coaddition") {
  TEST_CASE("examples") {
    CHECK(max_abs_diff(coadd(kU, BetaVector<>::zero(3)), kU) < 1e-15);
    CHECK(max_abs_diff(coadd(kU, kV), coadd(kV, kU)) == 0.0);
    CHECK(max_abs_diff(coadd(kU, kU), BetaVector<>{1.2 / 1.36, 0.0, 0.0}) < 1e-15);
    CHECK(max_abs_diff(coadd(kU, kU), einstein_add(kU, kU)) < 1e-15);
  }

  TEST_CASE("closed form agrees with the gyration definition") {
    BallSampler s(29);
    for (int i = 0; i < 300; ++i) {
      const auto u = s.point(3, 0.99), v = s.point(3, 0.99);
      CHECK(max_abs_diff(coadd(u, v), coadd_via_gyration(u, v)) < 1e-10);
      CHECK(max_abs_diff(coadd(u, v),
                         scalar_mul(2.0, BetaVector<>::from_expression((gamma(u).value() * u.coords() +
                                                                        gamma(v).value() * v.coords()) /
                                                                       (gamma(u).value() + gamma(v).value())))) <
            1e-12);
    }
  }
}

TEST_SUITE("cosubtraction") {
  TEST_CASE("examples") {
    CHECK(cosub(kU, kU).norm() < 1e-15);
    const auto b = einstein_add(kU, kV);
    CHECK(max_abs_diff(cosub(b, kV), kU) < 1e-15);
    const BetaVector<> a{0.0, 0.6, 0.0};
    const BetaVector<> rhs{0.6, 0.48, 0.0};
    const auto x = cosub(rhs, a);
    CHECK(max_abs_diff(einstein_add(x, a), rhs) < 1e-12);
  }

  TEST_CASE("right cancellation and its dual") {
    BallSampler s(31);
    for (int i = 0; i < 300; ++i) {
      const auto u = s.point(3, 0.99), v = s.point(3, 0.99);
      CHECK(max_abs_diff(cosub(einstein_add(v, u), u), v) < 1e-10);
      CHECK(max_abs_diff(einstein_sub(coadd(v, u), u), v) < 1e-10);
    }
  }

  TEST_CASE("plain right cancellation fails") {
    const auto back = einstein_sub(einstein_add(kU, kV), kV);
    CHECK(max_abs_diff(back, kU) > 1e-3);
  }
}
