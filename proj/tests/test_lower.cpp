// Lower-bound channels: anything that must happen fast enough to count as
// measurement completion. Anchors frozen from independent evaluation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "csl/cslcore.hpp"
#include "csl/lower_channels.hpp"
#include "csl/units.hpp"
#include "doctest.h"

using namespace csl;

TEST_CASE("photographic speck-formation bound") {
  const CslParams p = CslParams::standard();
  const EmulsionModel e;
  const ChannelResult r = photographic_lower_bound(p, e);
  CHECK(r.channel_id == "photographic");
  CHECK(r.kind == BoundKind::LowerBound);
  CHECK(r.lambda_bound.in(un::per_s) ==
        doctest::Approx(4.7155575675e-8).epsilon(1e-9));
  CHECK(r.multiplier_vs_standard ==
        doctest::Approx(2.1434352580e9).epsilon(1e-9));
  CHECK(r.uncertainty_decades == doctest::Approx(2.0));

  // Wider correlation length: silver confined to the grain, bromine spread
  // over the gelatine, both suppressed, so the demanded coupling grows.
  const CslParams wide = CslParams::make(p.lambda, 1e-4 * un::cm);
  const ChannelResult rw = photographic_lower_bound(wide, e);
  CHECK(rw.lambda_bound.in(un::per_s) ==
        doctest::Approx(2.9629980800e-6).epsilon(1e-9));
  CHECK(rw.multiplier_vs_standard ==
        doctest::Approx(1.3468173091e11).epsilon(1e-9));

  EmulsionModel bad = e;
  bad.atoms_per_speck = 0;
  CHECK_THROWS_AS(photographic_lower_bound(p, bad), std::domain_error);
}

TEST_CASE("recoil and back-motion side effects stay far below the track rate") {
  const CslParams p = CslParams::standard();
  const auto est =
      photographic_side_estimates(p, 3.0 * un::eV(), (1.0 / 30.0) * un::s, 1);
  REQUIRE(est.size() == 2);
  CHECK(est[0].first == "detector_recoil");
  CHECK(est[0].second.in(un::per_s) ==
        doctest::Approx(5.6149578595e-7).epsilon(1e-9));
  CHECK(est[1].first == "ion_back_motion");
  CHECK(est[1].second.in(un::per_s) ==
        doctest::Approx(6.4152e-14).epsilon(1e-12));

  // With a realistic number of grain-sized groups in the detector, both
  // side effects sit at least a thousandfold below the main channel.
  const auto big =
      photographic_side_estimates(p, 3.0 * un::eV(), (1.0 / 30.0) * un::s,
                                  1000000000000000LL);
  MassConfig track;
  track.nucleons_per_group = 5640;
  track.groups = 20;
  track.mode = DisplacementMode::Saturated;
  const double main_rate = reduction_rate(p, track).in(un::per_s);
  CHECK(big[0].second.in(un::per_s) * 1e3 < main_rate);
  CHECK(big[1].second.in(un::per_s) * 1e3 < main_rate);

  CHECK_THROWS_AS(
      photographic_side_estimates(p, 3.0 * un::eV(), un::s, 0),
      std::domain_error);
  CHECK_THROWS_AS(
      photographic_side_estimates(p, 3.0 * un::cm, un::s, 1),
      DimensionError);
}

TEST_CASE("etched-track equilibration bound") {
  const CslParams p = CslParams::standard();
  TrackModel t;
  const ChannelResult chem = etched_track_lower_bound(p, t);
  CHECK(chem.channel_id == "etched_track");
  CHECK(chem.lambda_bound.in(un::per_s) ==
        doctest::Approx(1.3509491152e-7).epsilon(1e-9));
  CHECK(chem.multiplier_vs_standard ==
        doctest::Approx(6.1406777965e9).epsilon(1e-9));
  CHECK(chem.uncertainty_decades == doctest::Approx(0.5));

  t.equilibrium_criterion = TrackModel::Criterion::Thermal;
  const ChannelResult th = etched_track_lower_bound(p, t);
  CHECK(th.lambda_bound.in(un::per_s) ==
        doctest::Approx(1.2816228621e-4).epsilon(1e-9));
  CHECK(th.uncertainty_decades == doctest::Approx(1.5));

  // Endpoints of the plausible thermal window.
  t.thermal_time_min = 1e-9 * un::s;
  t.thermal_time_max = 1e-9 * un::s;
  CHECK(etched_track_lower_bound(p, t).multiplier_vs_standard ==
        doctest::Approx(1.8422033390e11).epsilon(1e-9));
  t.thermal_time_min = 1e-12 * un::s;
  t.thermal_time_max = 1e-12 * un::s;
  CHECK(etched_track_lower_bound(p, t).multiplier_vs_standard ==
        doctest::Approx(1.8422033390e14).epsilon(1e-9));

  TrackModel wide;
  const CslParams q = CslParams::make(p.lambda, 1e-4 * un::cm);
  CHECK(etched_track_lower_bound(q, wide).multiplier_vs_standard ==
        doctest::Approx(6.1406777965e10).epsilon(1e-9));

  TrackModel bad;
  bad.chemical_time = 1e-10 * un::s;  // below the thermal window
  CHECK_THROWS_AS(etched_track_lower_bound(p, bad), std::domain_error);
}

TEST_CASE("single-photon vision estimates are labeled rates, not bounds") {
  const auto std_est = vision_estimates(CslParams::standard());
  REQUIRE(std_est.size() == 2);
  CHECK(std_est[0].channel_id == "vision_rhodopsin");
  CHECK(std_est[0].lambda_bound.in(un::per_s) ==
        doctest::Approx(1.408e-11).epsilon(1e-12));
  CHECK(std_est[1].channel_id == "vision_rod_chain");
  CHECK(std_est[1].lambda_bound.in(un::per_s) ==
        doctest::Approx(9.426780e-3).epsilon(1e-12));
  for (const auto& r : std_est) {
    bool labeled = false;
    for (const auto& f : r.flags) labeled = labeled || f == "estimate-not-bound";
    CHECK(labeled);
  }

  const auto fast = vision_estimates(CslParams::case_i());
  CHECK(fast[0].lambda_bound.in(un::per_s) ==
        doctest::Approx(2.56e-4).epsilon(1e-12));
  CHECK(fast[1].lambda_bound.in(un::per_s) ==
        doctest::Approx(1.713960e5).epsilon(1e-12));
}

TEST_CASE("pixel-size tradeoff flips from quartic to linear at r_C") {
  const Qty r_c = 1e-5 * un::cm;
  const TradeoffExponents below = photoreceptor_tradeoff(1e-6 * un::cm, r_c);
  CHECK(below.rate_exponent == 4);
  CHECK(below.resolution_exponent == -2);
  CHECK_FALSE(below.at_crossover);

  const TradeoffExponents above = photoreceptor_tradeoff(1e-3 * un::cm, r_c);
  CHECK(above.rate_exponent == 1);

  CHECK(photoreceptor_tradeoff(r_c, r_c).at_crossover);
  CHECK_THROWS_AS(photoreceptor_tradeoff(1.0 * un::s, r_c), DimensionError);
}
