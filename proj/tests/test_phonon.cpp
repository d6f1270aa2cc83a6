// Phonon-emission reduction: cascade integrals against closed forms, the
// coherence-average shortcut, carrier-mass suppression, and the thermal
// worst case. Anchors frozen from independent evaluation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "csl/cslcore.hpp"
#include "csl/phonon.hpp"
#include "csl/units.hpp"
#include "doctest.h"

using namespace csl;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CarrierModel electron_with_k0(const LatticeModel& l, double multiple) {
  CarrierModel c = CarrierModel::electron();
  c.k0 = multiple * thermal_wavenumber(c, l);
  return c;
}
}  // namespace

TEST_CASE("carrier wave numbers at the lattice defaults") {
  const LatticeModel l;
  const CarrierModel e = CarrierModel::electron();
  CHECK(thermal_wavenumber(e, l).in(un::per_cm) ==
        doctest::Approx(1.0088607664e7).epsilon(1e-9));
  CHECK(emission_threshold_wavenumber(e, l).in(un::per_cm) ==
        doctest::Approx(2.5913978227e5).epsilon(1e-9));
  validate_lattice(l);

  LatticeModel cramped = l;
  cramped.debye_frequency = 1e15 * un::per_s;  // wavelength below the spacing
  CHECK_THROWS_AS(validate_lattice(cramped), std::domain_error);
}

TEST_CASE("single-mode rate factor and its coherence suppression") {
  const CslParams p = CslParams::standard();
  const LatticeModel l;
  const long long n = 1000000000LL;

  // At the wavelength-equals-r_C boundary the factor is untouched.
  const Qty omega_c = 2.0 * 3.14159265358979323846 * l.sound_speed / p.r_c;
  const double bare = phonon_mode_rate_factor(p, l, n, omega_c, false);
  CHECK(bare == doctest::Approx(8.3621366722e3).epsilon(1e-9));
  CHECK(phonon_mode_rate_factor(p, l, n, omega_c, true) ==
        doctest::Approx(bare).epsilon(1e-12));

  // At the lattice-spacing wavelength the suppression is one over the
  // number of atoms per correlation cell.
  const Qty atom_density = l.nucleon_density / 100.0;
  const double spacing = std::cbrt(1.0 / atom_density.in(un::per_cm3));
  const Qty omega_a = omega_c * (p.r_c.in(un::cm) / spacing);
  const double ratio = phonon_mode_rate_factor(p, l, n, omega_a, true) /
                       phonon_mode_rate_factor(p, l, n, omega_a, false);
  const double atoms_per_cell =
      (atom_density * pow_int(p.r_c, 3)).as_dimensionless();
  CHECK(ratio == doctest::Approx(1.0 / atoms_per_cell).epsilon(1e-9));

  // One phonon spread over N groups of n nucleons, pushed through the
  // displacement-squared rate, lands back on lambda times the factor.
  const Constants& k = constants();
  const Qty omega = 1e12 * un::per_s;
  MassConfig cfg;
  cfg.nucleons_per_group = 1000000;
  cfg.groups = 50;
  cfg.mode = DisplacementMode::SmallDisplacement;
  cfg.displacement =
      sqrt_qty(k.hbar / (50.0 * 1e6 * k.m_N * omega));
  const double via_reduction = reduction_rate(p, cfg).in(un::per_s);
  const double via_factor =
      (p.lambda * phonon_mode_rate_factor(p, l, 1000000, omega, false))
          .in(un::per_s);
  CHECK(rel(via_reduction, via_factor) < 1e-12);

  CHECK_THROWS_AS(phonon_mode_rate_factor(p, l, n, -omega, false),
                  std::domain_error);
  CHECK_THROWS_AS(phonon_mode_rate_factor(p, l, 0, omega, false),
                  std::domain_error);
}

TEST_CASE("slow-down cascade: closed forms at the defaults") {
  const CslParams p = CslParams::standard();
  const LatticeModel l;
  const CarrierModel e = CarrierModel::electron();
  const long long n = 1000000000LL;

  const Qty plain = electron_slowdown_reduction(p, l, e, n);
  CHECK((plain / p.lambda).as_dimensionless() ==
        doctest::Approx(3.2549619350e2).epsilon(1e-9));

  const Qty quoted =
      electron_slowdown_reduction(p, l, e, n, PhononCoherence::QuotedAverage);
  CHECK(quoted.in(un::per_s) ==
        doctest::Approx(6.9439386341e-18).epsilon(1e-9));

  const Qty resolved =
      electron_slowdown_reduction(p, l, e, n, PhononCoherence::Resolved);
  CHECK(resolved.in(un::per_s) ==
        doctest::Approx(6.8358215017e-18).epsilon(1e-9));
  // The published shortcut overshoots the resolved form by ~1.6% here.
  CHECK(rel(resolved.in(un::per_s), quoted.in(un::per_s)) < 0.02);

  // No slow-down interval, no reduction.
  CHECK(electron_slowdown_reduction(p, l, electron_with_k0(l, 1.0), n)
            .in(un::per_s) == 0.0);

  CHECK_THROWS_AS(
      electron_slowdown_reduction(p, l, CarrierModel::heavy_ion(), n),
      std::domain_error);
  CarrierModel below = e;
  below.k0 = 0.5 * thermal_wavenumber(e, l);
  CHECK_THROWS_AS(electron_slowdown_reduction(p, l, below, n),
                  std::domain_error);
}

TEST_CASE("slow-down cascade: double integral agrees with the closed forms") {
  const CslParams p = CslParams::standard();
  const LatticeModel l;
  const long long n = 1000000000LL;

  for (double m : {2.0, 10.0, 100.0}) {
    const CarrierModel c = electron_with_k0(l, m);
    const double plain =
        electron_slowdown_reduction(p, l, c, n).in(un::per_s);
    const double plain_num =
        electron_slowdown_reduction_numeric(p, l, c, n, false).in(un::per_s);
    CHECK(rel(plain_num, plain) < 1e-8);

    const double resolved =
        electron_slowdown_reduction(p, l, c, n, PhononCoherence::Resolved)
            .in(un::per_s);
    const double resolved_num =
        electron_slowdown_reduction_numeric(p, l, c, n, true).in(un::per_s);
    CHECK(rel(resolved_num, resolved) < 1e-8);
  }

  // The emission-shape normalization drops out of the answer.
  const CarrierModel c = electron_with_k0(l, 10.0);
  const double base =
      electron_slowdown_reduction_numeric(p, l, c, n, true, 1.0).in(un::per_s);
  for (double sigma : {0.1, 10.0}) {
    CHECK(rel(electron_slowdown_reduction_numeric(p, l, c, n, true, sigma)
                  .in(un::per_s),
              base) < 1e-12);
  }

  // Hotter lattice, larger thermal wave number, smaller total.
  double prev = 1e300;
  for (double t : {100.0, 300.0, 900.0}) {
    LatticeModel hot = l;
    hot.temperature = t * un::K;
    const double f =
        (electron_slowdown_reduction(p, hot, CarrierModel::electron(), n) /
         p.lambda)
            .as_dimensionless();
    CHECK(f < prev);
    prev = f;
  }

  CHECK_THROWS_AS(
      electron_slowdown_reduction_numeric(p, l, CarrierModel::electron(), n,
                                          false),
      std::domain_error);  // unbounded k0 has no numeric counterpart
}

TEST_CASE("heavy carriers are exponentially shut out") {
  const LatticeModel l;
  CHECK(ion_emission_suppression(CarrierModel::electron(), l) ==
        doctest::Approx(0.9990108046).epsilon(1e-9));

  const double calibrated =
      ion_emission_suppression(CarrierModel::calibrated_heavy_ion(l), l);
  CHECK(std::log10(calibrated) == doctest::Approx(-65.144172).epsilon(1e-6));
  CHECK(CarrierModel::calibrated_heavy_ion(l).effective_mass.in(un::g) ==
        doctest::Approx(1.3806490000e-22).epsilon(1e-9));

  const double exact =
      ion_emission_suppression(CarrierModel::heavy_ion(100.0), l);
  CHECK(std::log10(exact) == doctest::Approx(-78.350430).epsilon(1e-6));

  // Suppression scales as exp(-const x m): quadrupling the mass squares
  // the exponent's base ratio twice over.
  const double s1 = std::log(ion_emission_suppression(CarrierModel::heavy_ion(25.0), l));
  const double s2 = std::log(ion_emission_suppression(CarrierModel::heavy_ion(100.0), l));
  CHECK(rel(s2, 4.0 * s1) < 1e-12);

  LatticeModel soft = l;
  soft.sound_speed = 1.0 * un::cm_per_s;
  CHECK(ion_emission_suppression(CarrierModel::electron(), soft) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("thermal fluctuations as a deliberate over-bound") {
  const CslParams p = CslParams::standard();
  const LatticeModel l;
  const long long n = 1000000000LL;

  const Qty per_group = thermal_fluctuation_bound(p, l, n, 1);
  CHECK(per_group.in(un::per_s) ==
        doctest::Approx(2.5672642019e-9).epsilon(1e-9));
  CHECK(thermal_fluctuation_bound(p, l, n, 20).in(un::per_s) ==
        doctest::Approx(5.1345284038e-8).epsilon(1e-9));

  // Linear in T, N, lambda; quadratic in n.
  LatticeModel hot = l;
  hot.temperature = 600.0 * un::K;
  CHECK(rel(thermal_fluctuation_bound(p, hot, n, 1).in(un::per_s),
            2.0 * per_group.in(un::per_s)) < 1e-12);
  const CslParams strong = CslParams::make(2.0 * p.lambda, p.r_c);
  CHECK(rel(thermal_fluctuation_bound(strong, l, n, 1).in(un::per_s),
            2.0 * per_group.in(un::per_s)) < 1e-12);
  CHECK(rel(thermal_fluctuation_bound(p, l, 2 * n, 1).in(un::per_s),
            4.0 * per_group.in(un::per_s)) < 1e-12);

  LatticeModel cold = l;
  cold.temperature = 1e-30 * un::K;
  CHECK(rel(thermal_fluctuation_bound(p, cold, n, 1).in(un::per_s),
            (1e-30 / 300.0) * per_group.in(un::per_s)) < 1e-12);
}

TEST_CASE("Debye coherence average matches its closed form") {
  const CslParams p = CslParams::standard();
  const LatticeModel l;
  const double numeric = debye_coherence_average(p, l);
  const double analytic =
      (3.0 * 3.14159265358979323846 * l.sound_speed /
       (p.r_c * l.debye_frequency))
          .as_dimensionless();
  CHECK(analytic == doctest::Approx(9.4247779608e-3).epsilon(1e-9));
  CHECK(numeric == doctest::Approx(9.4246539357e-3).epsilon(1e-8));
  CHECK(rel(numeric, analytic) < 0.05);
}
