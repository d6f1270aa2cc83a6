#include "csl/upper_channels.hpp"

#include <cmath>
#include <stdexcept>

#include "csl/units.hpp"

namespace csl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Heating power per unit lambda for a single nucleon, erg. Every thermal
// channel divides an observed power budget by this.
Qty heating_per_nucleon_per_lambda(const CslParams& p) {
  return heating_rate(p, constants().m_N) / p.lambda;
}

}  // namespace

Cosmology Cosmology::standard() {
  return Cosmology{71.0 * un::km_per_s() / un::Mpc(), 0.26, 0.74};
}

Qty lookback_derivative(const Cosmology& c, double z) {
  require_dim(c.h0, dim::rate, "Hubble rate");
  if (z < 0.0) throw std::domain_error("lookback_derivative: z < 0");
  if (std::abs(c.omega_m + c.omega_lambda - 1.0) > 1e-12) {
    throw std::domain_error("lookback_derivative: cosmology is not flat");
  }
  const double zp1 = 1.0 + z;
  const double e_z = std::sqrt(c.omega_m * zp1 * zp1 * zp1 + c.omega_lambda);
  return 1.0 / (c.h0 * zp1 * e_z);
}

ChannelResult igm_bound(const CslParams& p, const Cosmology& c, const IgmState& s,
                        Qty accumulation_age) {
  require_dim(s.temperature, dim::temperature, "IGM temperature");
  require_dim(accumulation_age, dim::time, "accumulation age");
  const Constants& k = constants();
  const Qty per_lambda = heating_per_nucleon_per_lambda(p);

  if (s.z >= 0.5) {
    // Heating balances adiabatic cooling: 3 k_B T / (1+z) per unit redshift,
    // spread over |dt/dz|.
    const Qty cooling =
        3.0 * k.k_B * s.temperature / (1.0 + s.z) / lookback_derivative(c, s.z);
    return make_channel_result(
        "igm_z3", BoundKind::UpperBound, cooling / per_lambda, 0.5,
        "collapse heating of intergalactic protons capped by the adiabatic "
        "cooling rate; ionized-fraction and He corrections absorbed into the "
        "half-decade uncertainty",
        {"Ricotti, Gnedin & Shull, ApJ 534 (2000)"});
  }
  // Near z = 0 there is no cooling budget to balance; instead the energy
  // accumulated over the quiet epoch must not exceed the thermal content.
  const Qty budget = 1.5 * k.k_B * s.temperature;
  return make_channel_result(
      "igm_z0", BoundKind::UpperBound, budget / (per_lambda * accumulation_age),
      0.5,
      "heating integrated over the low-redshift epoch kept below the observed "
      "thermal energy per proton",
      {"Ricotti, Gnedin & Shull, ApJ 534 (2000)"});
}

ChannelResult igm_combined_bound(const CslParams& p, const Cosmology& c,
                                 const IgmState& z3, const IgmState& z0,
                                 Qty accumulation_age) {
  const ChannelResult hi = igm_bound(p, c, z3, accumulation_age);
  const ChannelResult lo = igm_bound(p, c, z0, accumulation_age);
  const double mean_log =
      0.5 * (std::log10(hi.lambda_bound.in(un::per_s)) +
             std::log10(lo.lambda_bound.in(un::per_s)));
  return make_channel_result(
      "igm", BoundKind::UpperBound, std::pow(10.0, mean_log) * un::per_s, 1.0,
      "decade average of the high-z cooling balance and the low-z accumulated "
      "heating limits",
      {"Ricotti, Gnedin & Shull, ApJ 534 (2000)"});
}

ChannelResult cmb_budget_bound(const CslParams& p, double photons_per_baryon,
                               double fraction, Qty window) {
  require_dim(window, dim::time, "thermalization window");
  if (photons_per_baryon <= 0.0 || fraction <= 0.0 || fraction > 1.0) {
    throw std::domain_error("cmb_budget_bound: bad budget parameters");
  }
  const Qty budget =
      fraction * photons_per_baryon * constants().k_B * (3.0 * un::K);
  const Qty bound = budget / (heating_per_nucleon_per_lambda(p) * window);
  return make_channel_result(
      "cmb", BoundKind::UpperBound, bound, 1.0,
      "energy release per baryon, if thermalized into the microwave "
      "background, held under a tenth of its energy density",
      {"COBE/FIRAS spectral distortion limits"});
}

ChannelResult fullerene_bound(const CslParams& p, long long n, Qty grating,
                              Qty transit) {
  require_dim(transit, dim::time, "transit time");
  MassConfig cfg;
  cfg.nucleons_per_group = n;
  cfg.displacement = grating;
  cfg.mode = DisplacementMode::Exact;
  const Qty rate_per_lambda = reduction_rate(p, cfg) / p.lambda;
  const Qty bound = 1.0 / (transit * rate_per_lambda);
  return make_channel_result(
      "fullerene", BoundKind::UpperBound, bound, 0.5,
      "grating superposition of a thousand-nucleon molecule must keep its "
      "coherence for one transit",
      {"Nairz, Arndt & Zeilinger, Am. J. Phys. 71 (2003)"});
}

double fullerene_washout_count(const CslParams& p, Qty grating, Qty transit) {
  MassConfig cfg;
  cfg.nucleons_per_group = 1;
  cfg.displacement = grating;
  cfg.mode = DisplacementMode::Exact;
  const Qty unit_rate = reduction_rate(p, cfg);
  return std::sqrt(1.0 / (unit_rate * transit).as_dimensionless());
}

Qty supercurrent_decay_rate(const CslParams& p, Qty k_f) {
  require_dim(k_f, dim::wavevector, "Fermi wavevector");
  const Constants& k = constants();
  const double occupancy = (p.r_c * k_f).as_dimensionless();
  if (occupancy <= 1.0) {
    throw std::domain_error(
        "supercurrent_decay_rate: r_C k_F <= 1, indistinguishability "
        "suppression does not apply");
  }
  const double mass_ratio = (k.m_e / k.m_N).as_dimensionless();
  return p.lambda * (mass_ratio * mass_ratio / occupancy);
}

ChannelResult supercurrent_bound(const CslParams& p, Qty k_f, Qty decay_limit) {
  require_dim(decay_limit, dim::rate, "decay limit");
  const Qty bound = p.lambda * (decay_limit / supercurrent_decay_rate(p, k_f));
  return make_channel_result(
      "supercurrent", BoundKind::UpperBound, bound, 1.0,
      "persistent-current decay: only the one electron in r_C of the "
      "occupied Fermi sea can be distinguished, and recombination back into "
      "the condensate is neglected (overestimates the effect)",
      {"Kittel, Introduction to Solid State Physics"});
}

ExcitationTarget ExcitationTarget::hydrogen() {
  ExcitationTarget t;
  t.name = "hydrogen";
  t.radius = 1e-8 * un::cm;
  t.constituent_mass = constants().m_e;
  t.rate_limit = 1.0 / (4e17 * un::s);
  t.uncertainty_decades = 1.0;
  t.notes =
      "electron lifted out of the ground state at most once per cosmic age";
  return t;
}

ExcitationTarget ExcitationTarget::proton_constituent() {
  const Constants& k = constants();
  ExcitationTarget t;
  t.name = "proton";
  t.radius = 1e-13 * un::cm;
  t.constituent_mass = k.m_N / 3.0;
  const double scale =
      ((k.m_N * k.c * k.c) / (250.0 * 1e3 * un::MeV())).as_dimensionless();
  t.selection_suppression = scale * scale * scale * scale;
  t.rate_limit = 0.3e-40 * un::per_s;
  t.uncertainty_decades = 1.0;
  t.notes =
      "quark excitation against nucleon-decay searches; energy-conservation "
      "suppression (m_N c^2 / 250 GeV)^4 applied";
  return t;
}

ExcitationTarget ExcitationTarget::proton_current() {
  const Constants& k = constants();
  ExcitationTarget t = proton_constituent();
  t.name = "proton_current";
  t.constituent_mass = 10.0 * un::MeV() / (k.c * k.c);
  t.selection_suppression = 1.0;
  t.notes = "proton excitation rate with current-quark masses, no suppression";
  return t;
}

ExcitationTarget ExcitationTarget::germanium_nuclear() {
  ExcitationTarget t;
  t.name = "ge";
  t.radius = 1.4e-13 * std::cbrt(73.0) * un::cm;
  t.constituent_mass = constants().m_N;
  const GeDetector d;
  t.rate_limit = d.count_limit * d.bin_width / d.atoms_per_mass;
  t.uncertainty_decades = 1.0;
  t.notes =
      "nucleon lifted out of the Ge nucleus at most as often as the counting "
      "limit of a low-background spectrometer";
  return t;
}

Qty excitation_rate(const CslParams& p, const ExcitationTarget& t) {
  require_dim(t.radius, dim::length, "target radius");
  require_dim(t.constituent_mass, dim::mass, "constituent mass");
  const double m = (t.constituent_mass / constants().m_N).as_dimensionless();
  const double x = (t.radius / p.r_c).as_dimensionless();
  return p.lambda * m * m * x * x * x * x * t.selection_suppression;
}

ChannelResult excitation_bound(const CslParams& p, const ExcitationTarget& t) {
  require_dim(t.rate_limit, dim::rate, "excitation rate limit");
  const Qty rate = excitation_rate(p, t);
  const Qty bound = p.lambda * (t.rate_limit / rate).as_dimensionless();
  return make_channel_result(
      "excitation_" + t.name, BoundKind::UpperBound, bound,
      t.uncertainty_decades, t.notes,
      {"Collett, Pearle, Avignone & Nussinov, Found. Phys. 25 (1995)",
       "Particle Data Group nucleon-decay limits"});
}

ChannelResult ge_radiation_bound(const CslParams& p, const GeDetector& d,
                                 bool apply_neutralization) {
  // Spectrum evaluated with the nucleon mass: the published analysis of this
  // data treats the radiating quasi-free electrons that way, which weakens
  // the rate by (m_N/m_e)^2 relative to the naive electron formula.
  const Qty per_electron =
      radiated_power_spectrum(p, d.bin_center) * d.bin_width;
  const Qty per_mass =
      per_electron * d.quasi_free_electrons_per_atom * d.atoms_per_mass;
  const Qty limit_rate = d.count_limit * d.bin_width;
  Qty bound = p.lambda * (limit_rate / per_mass).as_dimensionless();
  std::string notes =
      "spontaneous 11 keV X rays from quasi-free electrons in a Ge "
      "spectrometer; an independent analysis of the same data quotes a "
      "combination lambda r_C^-4 a factor ~1e3 smaller, unresolved here";
  if (apply_neutralization) {
    const double corr =
        neutralization_correction(1e-8 * un::cm, 3e-4, p);
    bound = bound / corr;
    notes +=
        "; charge-neutralization suppression applied (bound electrons shield "
        "the collapse-driven charge motion)";
  }
  return make_channel_result("radiation_ge", BoundKind::UpperBound, bound, 1.0,
                             notes, {"Fu, Phys. Rev. A 56 (1997)"},
                             apply_neutralization
                                 ? std::vector<std::string>{"neutralized"}
                                 : std::vector<std::string>{});
}

Qty dust_radiated_power_density(Qty t_g, double kappa_prime) {
  require_dim(t_g, dim::temperature, "grain temperature");
  if (kappa_prime <= 0.0) {
    throw std::domain_error("dust_radiated_power_density: kappa' <= 0");
  }
  const Constants& k = constants();
  const Qty kt = k.k_B * t_g;
  const Qty h = 2.0 * kPi * k.hbar;
  const Qty hc = h * k.c;
  // Emissivity-weighted blackbody integral int x^4/(e^x - 1) dx, rounded to
  // the three figures the grain-emission literature carries.
  const double kIntegral = 24.9;
  return 32.0 * kPi * kIntegral * kappa_prime * k.c * pow_int(kt, 5) /
         pow_int(hc, 4);
}

ChannelResult dust_grain_bound(const CslParams& p, Qty t_g, double kappa_prime,
                               Qty nucleon_density) {
  require_dim(nucleon_density, dim::number_density, "nucleon density");
  const Qty radiated = dust_radiated_power_density(t_g, kappa_prime);
  const Qty heating_per_volume =
      heating_per_nucleon_per_lambda(p) * nucleon_density;
  return make_channel_result(
      "dust", BoundKind::UpperBound, radiated / heating_per_volume, 1.0,
      "interstellar grains at 20 K must radiate away the collapse heating",
      {"Draine & Lee, ApJ 285 (1984) grain emissivities"});
}

ChannelResult planetary_bound(const CslParams& p, Qty luminosity_per_mass) {
  require_dim(luminosity_per_mass, dim::energy - dim::mass - dim::time,
              "luminosity per mass");
  const Qty heating_per_mass =
      heating_per_nucleon_per_lambda(p) / constants().m_N;
  return make_channel_result(
      "planetary", BoundKind::UpperBound,
      luminosity_per_mass / heating_per_mass, 1.0,
      "collapse heating kept under the observed internal heat flow of the icy "
      "satellites; collisional decoherence exceeds the collapse coupling by "
      "~28 decades, so ordinary dissipation voids the argument",
      {"de Pater & Lissauer, Planetary Sciences"},
      {"dubious: dissipative equilibration"});
}

double planetary_collision_dominance_decades(const CslParams& p_at_limit,
                                             Qty collision_strength) {
  require_dim(collision_strength, dim::rate - dim::length * 2,
              "collisional localization strength");
  return std::log10((collision_strength / p_at_limit.eta()).as_dimensionless());
}

}  // namespace csl
