// Lower-bound channels: if latent-image formation in detectors already
// constitutes measurement, the collapse rate must be large enough to reduce
// the associated superpositions before the record forms. Each operation
// returns the reduction rate demanded by a detector physics model and the
// multiplier over the conventional rate needed to meet it.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csl/channel.hpp"
#include "csl/cslcore.hpp"
#include "csl/units.hpp"

namespace csl {

/// Photographic emulsion model: a developable silver speck of
/// atoms_per_speck atoms forms on each of grains_per_track grains; silver
/// ions move within the grain, bromine diffuses into the gelatine.
struct EmulsionModel {
  long long atoms_per_speck = 30;
  long long grains_per_track = 20;
  double silver_weight = 108.0;
  double bromine_weight = 80.0;
  Qty grain_diameter = 1e-5 * un::cm;
  Qty gelatine_diffusion_range = 1e-4 * un::cm;
  Qty speck_formation_rate = 30.0 * un::per_s;
  /// The formation rate is an order-of-magnitude estimate.
  double rate_uncertainty_decades = 2.0;
};

/// Etched-track detector model: a cylinder of lattice distortion of the
/// given radius along a track, divided into groups of length r_C.
struct TrackModel {
  Qty distortion_radius = 1e-6 * un::cm;  // plausible range 0.6e-6 .. 1.2e-6
  Qty track_length = 1e-3 * un::cm;
  Qty nucleon_density = 1e24 * un::per_cm3;
  enum class Criterion { Thermal, Chemical };
  Criterion equilibrium_criterion = Criterion::Chemical;
  /// Thermal equilibration spans decades; both ends are kept.
  Qty thermal_time_min = 1e-12 * un::s;
  Qty thermal_time_max = 1e-9 * un::s;
  Qty chemical_time = 3e-8 * un::s;
};

/// Reduction demanded by latent-image (silver speck) formation. For
/// r_C within the grain the displacement is saturated; for larger r_C the
/// in-grain silver gets (d/2r_C)^2 and the gelatine bromine the averaged
/// (range^2/12 r_C^2) suppression.
ChannelResult photographic_lower_bound(const CslParams& p, const EmulsionModel& e);

/// Order-of-magnitude side channels accompanying the photographic process:
/// whole-detector recoil from the absorbed photon, and the lattice back
/// motion compensating the speck displacement. Returned as (name, rate).
std::vector<std::pair<std::string, Qty>> photographic_side_estimates(
    const CslParams& p, Qty photon_energy, Qty elapsed, long long groups);

/// Reduction demanded by track formation in an etched-track detector.
ChannelResult etched_track_lower_bound(const CslParams& p, const TrackModel& t);

/// Visual-system estimates under the supplied parameters: rhodopsin
/// conformational change and the amplified rod signal chain. The returned
/// lambda_bound fields carry reduction rates, flagged as estimates.
std::vector<ChannelResult> vision_estimates(const CslParams& p);

/// Scaling exponents of photoreceptor response rate and spatial resolution
/// with pixel size ell: rate grows as ell^4 below r_C and ell above it,
/// resolution always falls as ell^-2.
struct TradeoffExponents {
  int rate_exponent = 0;
  int resolution_exponent = -2;
  bool at_crossover = false;
};
TradeoffExponents photoreceptor_tradeoff(Qty ell, Qty r_c);

}  // namespace csl
