// Upper-bound channels: laboratory and astrophysical observations that an
// enhanced collapse rate would violate. Each returns the largest allowed
// lambda as a ChannelResult, with the cosmological time-redshift machinery
// needed by the intergalactic-medium balance.
#pragma once

#include <string>

#include "csl/channel.hpp"
#include "csl/cslcore.hpp"
#include "csl/units.hpp"

namespace csl {

/// Flat FRW cosmology; the matter and dark-energy fractions must sum to 1.
struct Cosmology {
  Qty h0;  ///< s^-1
  double omega_m = 0.26;
  double omega_lambda = 0.74;
  static Cosmology standard();  ///< H0 = 71 km/s/Mpc
};

/// |dt/dz| = 1 / (H0 (1+z) sqrt(Omega_m (1+z)^3 + Omega_L)), seconds.
Qty lookback_derivative(const Cosmology& c, double z);

struct IgmState {
  double z = 3.0;
  Qty temperature = 2e4 * un::K;
};

/// Intergalactic-medium heating balance. Away from z = 0 the bound equates
/// collapse heating to the adiabatic cooling rate (3 k_B T/(1+z))|dz/dt|;
/// below z = 0.5 it instead requires the heating accumulated over
/// `accumulation_age` to stay under the observed thermal energy (3/2) k_B T.
ChannelResult igm_bound(const CslParams& p, const Cosmology& c, const IgmState& s,
                        Qty accumulation_age = 4e17 * un::s);

/// Decade-averaged combination of the z=3 and z~0 bounds.
ChannelResult igm_combined_bound(const CslParams& p, const Cosmology& c,
                                 const IgmState& z3 = {3.0, 2e4 * un::K},
                                 const IgmState& z0 = {0.06, 5011.872336272722 * un::K},
                                 Qty accumulation_age = 4e17 * un::s);

/// Thermalized-heating budget against the microwave background: total
/// energy released per proton over `window` must stay below
/// fraction x photons_per_baryon x (k_B x 3 K).
ChannelResult cmb_budget_bound(const CslParams& p,
                               double photons_per_baryon = 1e9,
                               double fraction = 0.1,
                               Qty window = 3.15e17 * un::s);

/// Matter-interferometry bound: a molecule of n nucleons in a grating
/// superposition of the given spacing must survive the transit.
ChannelResult fullerene_bound(const CslParams& p, long long n = 1000,
                              Qty grating = 2.5e-5 * un::cm,
                              Qty transit = 1e-2 * un::s);

/// Molecule count at which the interference pattern washes out
/// (reduction within one transit) at the supplied parameters.
double fullerene_washout_count(const CslParams& p, Qty grating = 2.5e-5 * un::cm,
                               Qty transit = 1e-2 * un::s);

/// Persistent-supercurrent decay: indistinguishability suppresses the rate
/// by 1/(r_C k_F) and the electron mass enters squared.
/// Predicted decay rate of a persistent current at the given parameters;
/// capping it at the observed persistence limit yields supercurrent_bound.
Qty supercurrent_decay_rate(const CslParams& p,
                            Qty k_f = (1.0 / 0.6e-3) * 1e5 * un::per_cm);

ChannelResult supercurrent_bound(const CslParams& p,
                                 Qty k_f = (1.0 / 0.6e-3) * 1e5 * un::per_cm,
                                 Qty decay_limit = 3e-13 * un::per_s);

/// Internal-excitation targets for the bound-system excitation formula
/// P-dot = lambda (m/m_N)^2 (a0/r_C)^4 x selection_suppression.
struct ExcitationTarget {
  std::string name;
  Qty radius;            ///< a0, cm
  Qty constituent_mass;  ///< g
  double selection_suppression = 1.0;
  Qty rate_limit;        ///< observational limit on P-dot, s^-1 per system
  double uncertainty_decades = 0.0;
  std::string notes;

  static ExcitationTarget hydrogen();           ///< atomic, cosmic-lifetime limit
  static ExcitationTarget proton_constituent(); ///< quark mass m_N/3, decay limit
  static ExcitationTarget proton_current();     ///< current-quark mass 10 MeV
  static ExcitationTarget germanium_nuclear();  ///< nuclear radius, emission limit
};

/// Excitation probability rate for the target at the supplied parameters.
Qty excitation_rate(const CslParams& p, const ExcitationTarget& t);

/// Largest lambda compatible with the target's observational limit.
ChannelResult excitation_bound(const CslParams& p, const ExcitationTarget& t);

/// Germanium spontaneous-emission detector for the radiation channel.
struct GeDetector {
  /// Quasi-free electrons radiating per atom; a config constant because the
  /// published evaluation never states its count.
  double quasi_free_electrons_per_atom = 4.0;
  Qty atoms_per_mass = 8.3e24 / (1000.0 * un::g);
  Qty bin_center = 11.0 * un::keV();
  Qty bin_width = 1.0 * un::keV();
  /// 0.05 counts/(keV kg day).
  Qty count_limit = 0.05 / (un::keV() * 1000.0 * un::g * un::day());
};

/// Bound from the absence of spontaneous X-ray emission; optionally applies
/// the charge-neutralization correction with a0 = 1e-8 cm, v/c = 3e-4.
ChannelResult ge_radiation_bound(const CslParams& p, const GeDetector& d = {},
                                 bool apply_neutralization = false);

/// Interstellar dust-grain radiative loss per volume at grain temperature
/// T_g with emissivity parameter kappa_prime, erg s^-1 cm^-3.
Qty dust_radiated_power_density(Qty t_g, double kappa_prime);

/// Grain energy balance: volumetric collapse heating at the given nucleon
/// density must not exceed the radiated power density.
ChannelResult dust_grain_bound(const CslParams& p, Qty t_g = 20.0 * un::K,
                               double kappa_prime = 0.05,
                               Qty nucleon_density = 1e24 * un::per_cm3);

/// Planetary heat-flow comparison, always flagged: collisional decoherence
/// dominates the collapse noise by ~28 decades, so equilibration arguments
/// void the bound.
ChannelResult planetary_bound(const CslParams& p,
                              Qty luminosity_per_mass = 4e-8 * un::erg /
                                                        (un::g * un::s));

/// log10 of collisional localization strength over the collapse coupling
/// eta = lambda/(2 r_C^2), evaluated at the supplied lambda.
double planetary_collision_dominance_decades(
    const CslParams& p_at_limit,
    Qty collision_strength = 1e30 / (un::cm * un::cm * un::s));

}  // namespace csl
