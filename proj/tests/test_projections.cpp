// Forward predictions: disk rotational diffusion versus the standard
// quantum limit, mirror decoherence multipliers, and the per-case
// instrument fixtures with their non-rescalability audit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "csl/projections.hpp"
#include "csl/units.hpp"
#include "doctest.h"

using namespace csl;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("calibrated disk mass and inertia") {
  const ParameterCase one = ParameterCase::case_one();
  const DiskGeometry d = DiskGeometry::calibrated(one.params);
  CHECK(d.mass().in(un::g) ==
        doctest::Approx(1.0509393495e-14).epsilon(1e-9));
  CHECK(d.moment_of_inertia().value() ==
        doctest::Approx(1.0509393495e-24).epsilon(1e-9));
  const Qty check = d.mass() * d.radius * d.radius / 4.0;
  CHECK(rel(d.moment_of_inertia().value(), check.value()) < 1e-12);

  DiskGeometry bad = d;
  bad.radius = -1.0 * un::cm;
  CHECK_THROWS_AS(bad.mass(), std::domain_error);
}

TEST_CASE("rotational diffusion against the angle quantum limit") {
  const DiskGeometry d1 =
      DiskGeometry::calibrated(ParameterCase::case_one().params);
  const DiskGeometry d2 =
      DiskGeometry::calibrated(ParameterCase::case_two().params);
  const Qty t = 1.0 * un::s;

  const double r1 = collett_pearle_ratio(ParameterCase::case_one(), d1, t);
  const double r2 = collett_pearle_ratio(ParameterCase::case_two(), d2, t);
  CHECK(r1 == doctest::Approx(6.6344949429e2).epsilon(1e-9));
  CHECK(r2 == doctest::Approx(1.8169312689e4).epsilon(1e-9));
  CHECK(rel(r1, 6.6e2) < 0.05);
  CHECK(rel(r2, 1.8e4) < 0.05);

  // Linear in t.
  CHECK(rel(collett_pearle_ratio(ParameterCase::case_one(), d1, 3.0 * un::s),
            3.0 * r1) < 1e-12);
  CHECK(collett_pearle_ratio(ParameterCase::case_one(), d1, 0.0 * un::s) ==
        0.0);

  // Square root in the collapse rate.
  const CslParams one = ParameterCase::case_one().params;
  const CslParams stronger = CslParams::make(4.0 * one.lambda, one.r_c);
  CHECK(rel(collett_pearle_ratio(ParameterCase::custom(stronger), d1, t),
            2.0 * r1) < 1e-12);

  // Doubling the inertia directly: diffusion ratio grows as sqrt(I) while
  // the quantum limit itself shrinks as 1/sqrt(I).
  const Qty inertia = d1.moment_of_inertia();
  const double base =
      collett_pearle_ratio_from_inertia(one, d1.rotation_factor, inertia, t);
  const double doubled = collett_pearle_ratio_from_inertia(
      one, d1.rotation_factor, 2.0 * inertia, t);
  CHECK(rel(doubled, std::sqrt(2.0) * base) < 1e-12);
  CHECK(rel(sql_angle(2.0 * inertia, t).as_dimensionless(),
            sql_angle(inertia, t).as_dimensionless() / std::sqrt(2.0)) <
        1e-12);
}

TEST_CASE("standard quantum limits") {
  const Qty t = 1.0 * un::s;
  const Qty inertia{1.05e-24, dim::mass + dim::length * 2};
  const double angle = sql_angle(inertia, t).as_dimensionless();
  CHECK(angle == doctest::Approx(3.1691546372e-2).epsilon(1e-9));
  CHECK(rel(angle, 0.032) < 0.02);
  CHECK(sql_angle(inertia, 0.0 * un::s).as_dimensionless() == 0.0);

  const Qty mass = 1.0509393495e-14 * un::g;
  const Qty pos = sql_position(mass, t);
  CHECK(pos.in(un::cm) == doctest::Approx(3.1677379953e-7).epsilon(1e-9));

  // Both limits share the sqrt(hbar t) core.
  const double lhs = pos.value() * std::sqrt(mass.value());
  const double rhs = sql_angle(inertia, t).value() * std::sqrt(inertia.value());
  CHECK(rel(lhs, rhs) < 1e-12);

  CHECK_THROWS_AS(sql_angle(inertia, -1.0 * un::s), std::domain_error);
  CHECK_THROWS_AS(sql_position(mass, 1.0 * un::cm), DimensionError);
  CHECK_THROWS_AS(sql_angle(mass, t), DimensionError);
}

TEST_CASE("mirror decoherence multipliers follow the parameter ratios") {
  const Qty side = 1.0 * un::cm;
  const Qty density = 1.0 * un::g_per_cm3;

  const MirrorProjection std_case =
      mirror_projection(ParameterCase::standard(), side, density);
  CHECK(std_case.eta.value() ==
        doctest::Approx(1.9763641643e22).epsilon(1e-9));
  CHECK(assert_dim(std_case.eta, dim::rate + dim::length * -2));
  CHECK(std_case.multiplier == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(std_case.order_unity_corrections);

  const MirrorProjection one =
      mirror_projection(ParameterCase::case_one(), side, density);
  const MirrorProjection two =
      mirror_projection(ParameterCase::case_two(), side, density);
  const CslParams p_std = CslParams::standard();
  const CslParams p1 = CslParams::case_i();
  const CslParams p2 = CslParams::case_ii();
  CHECK(rel(one.multiplier, ratio(p1.lambda, p_std.lambda)) < 1e-12);
  CHECK(rel(two.multiplier,
            ratio(p2.lambda, p_std.lambda) *
                std::pow(ratio(p2.r_c, p_std.r_c), 2)) < 1e-12);
  CHECK(one.multiplier == doctest::Approx(1.8181818182e7).epsilon(1e-9));
  CHECK(two.multiplier == doctest::Approx(1.3636363636e11).epsilon(1e-9));
  CHECK(rel(one.multiplier, 2e7) < 0.15);
  CHECK(rel(two.multiplier, 1.5e11) < 0.15);
  CHECK(one.fringe_damping == doctest::Approx(3.6363636364e-2).epsilon(1e-9));
  CHECK(two.fringe_damping == doctest::Approx(2.7272727273e2).epsilon(1e-9));

  // Quadratic in side and density, linear in lambda and r_C squared.
  const MirrorProjection s2 =
      mirror_projection(ParameterCase::standard(), 2.0 * side, density);
  const MirrorProjection d2 =
      mirror_projection(ParameterCase::standard(), side, 2.0 * density);
  CHECK(rel(s2.eta.value(), 4.0 * std_case.eta.value()) < 1e-12);
  CHECK(rel(d2.eta.value(), 4.0 * std_case.eta.value()) < 1e-12);
  const CslParams half = CslParams::make(0.5 * p_std.lambda, p_std.r_c);
  CHECK(rel(mirror_projection(ParameterCase::custom(half), side, density)
                .eta.value(),
            0.5 * std_case.eta.value()) < 1e-12);
  const CslParams wide = CslParams::make(p_std.lambda, 3.0 * p_std.r_c);
  CHECK(rel(mirror_projection(ParameterCase::custom(wide), side, density)
                .eta.value(),
            9.0 * std_case.eta.value()) < 1e-12);

  // A body comparable to the correlation length gets the validity flag.
  const MirrorProjection tiny =
      mirror_projection(ParameterCase::standard(), 2e-5 * un::cm, density);
  CHECK(tiny.order_unity_corrections);

  CHECK_THROWS_AS(mirror_projection(ParameterCase::standard(), side,
                                    1.0 * un::per_cm3),
                  DimensionError);
}

TEST_CASE("instrument fixtures are per-case and not pure rescalings") {
  const auto one = quoted_ratio_fixtures(ParameterCase::case_one());
  const auto two = quoted_ratio_fixtures(ParameterCase::case_two());
  REQUIRE(one.size() == 4);
  REQUIRE(two.size() == 4);
  CHECK(one[0].value == 1e-5);
  CHECK(one[1].value == 3e-3);
  CHECK(one[2].value == 0.02);
  CHECK(one[3].value == 6e4);
  CHECK(two[0].value == 1e-1);
  CHECK(two[1].value == 0.3);
  CHECK(two[2].value == 1.4);
  CHECK(two[3].value == 5e6);
  CHECK(one[2].experiment == "ligo");
  CHECK(one[2].horizon.in(un::s) == doctest::Approx(1.0 / 70.0));
  CHECK(one[3].experiment == "lisa");
  CHECK(one[3].horizon.in(un::s) == doctest::Approx(1e4));
  CHECK(one[0].quantity == "occupation_shift");
  CHECK(one[1].quantity == "rms_over_sql");

  CHECK_THROWS_AS(quoted_ratio_fixtures(ParameterCase::standard()),
                  std::domain_error);

  const FixtureScalingAudit audit = fixture_scaling_audit();
  CHECK(audit.implied_ratio ==
        doctest::Approx(0.86602540378).epsilon(1e-9));
  CHECK(audit.recorded_ratio == doctest::Approx(70.0).epsilon(1e-12));
  CHECK_FALSE(audit.pure_rescaling);
}
