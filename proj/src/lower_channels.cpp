#include "csl/lower_channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csl {
namespace {

const double kPi = 3.14159265358979323846;

void require_positive(const Qty& q, const char* what) {
  if (q.value() <= 0.0) {
    throw std::domain_error(std::string(what) + " must be positive");
  }
}

}  // namespace

ChannelResult photographic_lower_bound(const CslParams& p, const EmulsionModel& e) {
  if (e.atoms_per_speck < 1 || e.grains_per_track < 1) {
    throw std::domain_error("emulsion counts must be positive");
  }
  require_positive(e.grain_diameter, "grain diameter");
  require_dim(e.speck_formation_rate, dim::rate, "speck formation rate");

  const double groups = static_cast<double>(e.grains_per_track);
  double rate_per_lambda;
  if (ratio(p.r_c, e.grain_diameter) <= 1.0) {
    // Both species move farther than r_C: fully saturated displacement.
    const double n = static_cast<double>(e.atoms_per_speck) *
                     (e.silver_weight + e.bromine_weight);
    rate_per_lambda = n * n * groups;
  } else {
    // Silver stays within the grain; bromine diffuses a distance spread
    // uniformly over the gelatine range, averaging <x^2> = 1/3 of it.
    const double n_ag = static_cast<double>(e.atoms_per_speck) * e.silver_weight;
    const double n_br = static_cast<double>(e.atoms_per_speck) * e.bromine_weight;
    const double ag_factor = std::min(
        1.0, std::pow(ratio(e.grain_diameter, 2.0 * p.r_c), 2));
    const double br_factor = std::min(
        1.0, std::pow(ratio(e.gelatine_diffusion_range, p.r_c), 2) / 12.0);
    rate_per_lambda = groups * (n_ag * n_ag * ag_factor + n_br * n_br * br_factor);
  }

  const Qty lambda_required = e.speck_formation_rate / rate_per_lambda;
  return make_channel_result(
      "photographic", BoundKind::LowerBound, lambda_required,
      e.rate_uncertainty_decades,
      "reduction must outpace silver speck formation; formation rate is an "
      "order-of-magnitude estimate",
      {"Gurney-Mott latent image mechanism reviews"});
}

std::vector<std::pair<std::string, Qty>> photographic_side_estimates(
    const CslParams& p, Qty photon_energy, Qty elapsed, long long groups) {
  require_dim(photon_energy, dim::energy, "photon energy");
  require_dim(elapsed, dim::time, "elapsed time");
  if (groups < 1) throw std::domain_error("group count must be positive");
  const auto& k = constants();
  const double big_n = static_cast<double>(groups);

  // Photon-absorption recoil of the whole detector: momentum p = E/c
  // displaces the center of mass by p t / M over the formation time; with
  // M split into N r_C-sized groups of n nucleons each, Eq.-9-type algebra
  // leaves lambda/(4N) (p t / (m_N r_C))^2.
  const Qty momentum = photon_energy / k.c;
  const double kick =
      ((momentum * elapsed) / (k.m_N * p.r_c)).as_dimensionless();
  const Qty recoil = p.lambda / (4.0 * big_n) * kick * kick;

  // Back motion: the lattice compensates the displaced silver mass
  // (atomic weight 108), an effective displacement 108 r_C/(N n) that
  // cancels the n^2 N enhancement down to 108^2/(4N).
  const Qty back_motion = p.lambda * (108.0 * 108.0) / (4.0 * big_n);

  return {{"detector_recoil", recoil}, {"ion_back_motion", back_motion}};
}

ChannelResult etched_track_lower_bound(const CslParams& p, const TrackModel& t) {
  require_positive(t.distortion_radius, "distortion radius");
  require_positive(t.track_length, "track length");
  require_dim(t.nucleon_density, dim::number_density, "nucleon density");
  if (ratio(t.thermal_time_min, t.thermal_time_max) > 1.0 ||
      ratio(t.thermal_time_max, t.chemical_time) > 1.0) {
    throw std::domain_error("equilibration times must be ordered "
                            "thermal_min <= thermal_max <= chemical");
  }

  // Distorted cylinder sliced into r_C-long coherent groups.
  const Qty segment = ratio(p.r_c, t.track_length) < 1.0 ? p.r_c : t.track_length;
  const double n =
      (t.nucleon_density * kPi * t.distortion_radius * t.distortion_radius *
       segment).as_dimensionless();
  const double groups = std::max(1.0, ratio(t.track_length, p.r_c));

  double factor;  // displacement factor of the reduction rate
  if (ratio(t.distortion_radius, p.r_c) < 1.0) {
    factor = std::pow(ratio(t.distortion_radius, 2.0 * p.r_c), 2);
  } else {
    factor = 1.0 - std::exp(-std::pow(ratio(t.distortion_radius, 2.0 * p.r_c), 2));
  }
  const double rate_per_lambda = n * n * groups * factor;

  Qty criterion_time = t.chemical_time;
  double uncertainty = 0.5;
  std::string which = "chemical (etchability) equilibration";
  if (t.equilibrium_criterion == TrackModel::Criterion::Thermal) {
    criterion_time = sqrt_qty(t.thermal_time_min * t.thermal_time_max);
    uncertainty =
        0.5 * std::log10(ratio(t.thermal_time_max, t.thermal_time_min));
    which = "thermal equilibration (geometric mean of the plausible range)";
  }
  const Qty lambda_required = 1.0 / (criterion_time * rate_per_lambda);
  return make_channel_result(
      "etched_track", BoundKind::LowerBound, lambda_required, uncertainty,
      "reduction must complete within " + which,
      {"mica track-etch kinetics measurements"});
}

std::vector<ChannelResult> vision_estimates(const CslParams& p) {
  // Rhodopsin conformational change: ~4e4 nucleons moving ~4e-7 cm.
  MassConfig rhodopsin;
  rhodopsin.nucleons_per_group = 40000;
  rhodopsin.displacement = 4e-7 * un::cm;
  rhodopsin.mode = DisplacementMode::SmallDisplacement;
  const Qty r_rho = reduction_rate(p, rhodopsin);

  // Amplified rod signal: ~300 ion channels x 3000 ions x 23 nucleons,
  // displaced across the membrane, i.e. saturated.
  MassConfig rod;
  rod.nucleons_per_group = 300LL * 3000LL * 23LL;
  rod.mode = DisplacementMode::Saturated;
  const Qty r_rod = reduction_rate(p, rod);

  std::vector<ChannelResult> out;
  out.push_back(make_channel_result(
      "vision_rhodopsin", BoundKind::LowerBound, r_rho, 1.0,
      "reduction rate under the supplied parameters, not a bound; the "
      "conformational change completes in ~2e-13 s, far too fast for "
      "reduction to act at the single-molecule stage",
      {"photoreceptor single-photon response literature"},
      {"estimate-not-bound"}));
  out.push_back(make_channel_result(
      "vision_rod_chain", BoundKind::LowerBound, r_rod, 1.0,
      "reduction rate of the amplified rod signal under the supplied "
      "parameters, not a bound",
      {"photoreceptor single-photon response literature"},
      {"estimate-not-bound"}));
  return out;
}

TradeoffExponents photoreceptor_tradeoff(Qty ell, Qty r_c) {
  require_dim(ell, dim::length, "pixel size");
  require_positive(ell, "pixel size");
  const double x = ratio(ell, r_c);
  TradeoffExponents t;
  // Below r_C one pixel is a single coherent group: the displacement
  // factor carries an explicit ell^2 and the moved count n scales as ell,
  // entering squared, for ell^4 overall. Above r_C, n saturates and only
  // the group count N ~ ell keeps growing.
  t.rate_exponent = x < 1.0 ? 4 : 1;
  t.resolution_exponent = -2;
  t.at_crossover = x == 1.0;
  return t;
}

}  // namespace csl
