#include "csl/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "csl/lower_channels.hpp"
#include "csl/oracle.hpp"
#include "csl/phonon.hpp"
#include "csl/projections.hpp"
#include "csl/upper_channels.hpp"

namespace csl {
namespace {

constexpr double kPi = 3.14159265358979323846;

void add(std::vector<AnchorRow>& rows, std::string id, std::string channel,
         std::string desc, double computed, double expected, TolKind kind,
         double tol, std::string unit) {
  AnchorRow r;
  r.id = std::move(id);
  r.channel = std::move(channel);
  r.description = std::move(desc);
  r.computed = computed;
  r.expected = expected;
  r.kind = kind;
  r.tolerance = tol;
  r.unit = std::move(unit);
  rows.push_back(std::move(r));
}

double find_estimate(const std::vector<std::pair<std::string, Qty>>& list,
                     const std::string& name) {
  for (const auto& [id, q] : list)
    if (id == name) return q.in(un::per_s);
  throw std::logic_error("missing side estimate " + name);
}

double find_rate(const std::vector<ChannelResult>& list,
                 const std::string& id) {
  for (const auto& r : list)
    if (r.channel_id == id) return r.lambda_bound.in(un::per_s);
  throw std::logic_error("missing estimate " + id);
}

void core_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  const Constants& k = constants();
  add(rows, "gamma_parameterization", "core",
      "collapse strength gamma at the conventional parameters",
      p.gamma().in(pow_int(un::cm, 3) * un::per_s), 1e-30, TolKind::Relative,
      0.025, "cm^3 s^-1");
  add(rows, "many_body_rate", "core",
      "saturated reduction rate of 20 groups of 5640 nucleons",
      reduction_rate(p, MassConfig{5640, 20, 1.0, Qty{0.0, dim::length},
                                   DisplacementMode::Saturated})
          .in(un::per_s),
      1.3e-8, TolKind::Relative, 0.10, "s^-1");
  const Qty heat = heating_rate(p, k.m_N);
  add(rows, "nucleon_heating_erg", "core", "secular energy gain per nucleon",
      heat.in(un::erg_per_s), 1.1e-37, TolKind::Relative, 0.05, "erg s^-1");
  add(rows, "nucleon_heating_ev", "core", "secular energy gain per nucleon",
      heat.in(k.eV * un::per_s), 6.8e-26, TolKind::Relative, 0.05, "eV s^-1");
  const Qty power = radiated_power_up_to(p, k.m_e, k.m_e * k.c * k.c);
  const Qty gain = 0.5 * k.m_e * mean_squared_acceleration_rate(p, k.m_e);
  add(rows, "radiated_power_fraction", "core",
      "power radiated by a free charge relative to its stochastic heating",
      (power / gain).as_dimensionless(), 4.0 * k.alpha_fs / (3.0 * kPi),
      TolKind::Relative, 1e-9, "1");
  add(rows, "neutralization_suppression", "core",
      "emission suppression for a bound charge, a0 = 1e-8 cm, v/c = 3e-4",
      neutralization_correction(1e-8 * un::cm, 3e-4, p), 1.4e-6,
      TolKind::Relative, 0.05, "1");
}

void photographic_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  const Constants& k = constants();
  const EmulsionModel e;
  add(rows, "photographic_multiplier", "photographic",
      "rate enhancement demanded by silver speck formation",
      photographic_lower_bound(p, e).multiplier_vs_standard, 2e9,
      TolKind::Relative, 0.15, "1");
  const ChannelResult wide =
      photographic_lower_bound(CslParams::make(p.lambda, 1e-4 * un::cm), e);
  add(rows, "photographic_rc4_rate", "photographic",
      "speck reduction rate when the correlation length covers the grain "
      "spread",
      e.speck_formation_rate.in(un::per_s) / wide.multiplier_vs_standard,
      2.2e-10, TolKind::Relative, 0.10, "s^-1");
  add(rows, "photographic_rc4_multiplier", "photographic",
      "demanded enhancement at a tenfold correlation length",
      wide.multiplier_vs_standard, 1.4e11, TolKind::Relative, 0.10, "1");
  const auto sides =
      photographic_side_estimates(p, 3.0 * k.eV, (1.0 / 30.0) * un::s, 20);
  add(rows, "photographic_recoil", "photographic",
      "whole-detector recoil rate times the group count",
      20.0 * find_estimate(sides, "detector_recoil"), 0.5e-6,
      TolKind::Relative, 0.30, "s^-1");
  add(rows, "ion_back_motion", "photographic",
      "lattice back-motion rate times the group count",
      20.0 * find_estimate(sides, "ion_back_motion"), 1e-13,
      TolKind::LogDecades, 0.5, "s^-1");
}

void etched_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  const TrackModel t;
  const ChannelResult chem = etched_track_lower_bound(p, t);
  const double rate =
      1.0 / (t.chemical_time.in(un::s) * chem.multiplier_vs_standard);
  add(rows, "etched_track_rate", "etched_track",
      "reduction rate of the distortion-cylinder track",
      rate, 7e-3, TolKind::LogDecades, 0.2, "s^-1");
  add(rows, "etched_chemical_multiplier", "etched_track",
      "enhancement demanded by chemical-equilibrium track formation",
      chem.multiplier_vs_standard, 5e9, TolKind::Relative, 0.25, "1");
  add(rows, "etched_thermal_slow_multiplier", "etched_track",
      "thermal-equilibrium criterion, slow end",
      1.0 / (t.thermal_time_max.in(un::s) * rate), 1e11, TolKind::LogDecades,
      0.5, "1");
  add(rows, "etched_thermal_fast_multiplier", "etched_track",
      "thermal-equilibrium criterion, fast end",
      1.0 / (t.thermal_time_min.in(un::s) * rate), 1e14, TolKind::LogDecades,
      0.5, "1");
  add(rows, "etched_rc4_multiplier", "etched_track",
      "demanded enhancement at a tenfold correlation length",
      etched_track_lower_bound(CslParams::make(p.lambda, 1e-4 * un::cm), t)
          .multiplier_vs_standard,
      5e10, TolKind::Relative, 0.25, "1");
}

void vision_rows(std::vector<AnchorRow>& rows) {
  const auto est = vision_estimates(CslParams::case_i());
  add(rows, "rhodopsin_rate_enhanced", "vision",
      "rhodopsin conformational-change reduction rate, enhanced parameters",
      find_rate(est, "vision_rhodopsin"), 3e-4, TolKind::Relative, 0.30,
      "s^-1");
  add(rows, "rod_chain_rate_enhanced", "vision",
      "amplified rod signal chain reduction rate, enhanced parameters",
      find_rate(est, "vision_rod_chain"), 2e5, TolKind::Relative, 0.30,
      "s^-1");
}

void fullerene_rows(std::vector<AnchorRow>& rows, const RunConfig& cfg) {
  const CslParams p = CslParams::standard();
  add(rows, "fullerene_rate", "fullerene",
      "reduction rate of a molecule split across the grating period",
      reduction_rate(p, MassConfig{1000, 1, 1.0,
                                   cfg.fullerene_grating_cm * un::cm,
                                   DisplacementMode::Exact})
          .in(un::per_s),
      2e-11, TolKind::Relative, 0.25, "s^-1");
  add(rows, "fullerene_multiplier", "fullerene",
      "enhancement at which fringe washout would set in",
      fullerene_bound(p, 1000, cfg.fullerene_grating_cm * un::cm)
          .multiplier_vs_standard,
      5e12, TolKind::Relative, 0.25, "1");
  add(rows, "fullerene_washout_enhanced", "fullerene",
      "expected washout count at the strong enhanced case",
      fullerene_washout_count(CslParams::case_ii(),
                              cfg.fullerene_grating_cm * un::cm),
      5e5, TolKind::Relative, 0.25, "1");
}

void supercurrent_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  add(rows, "supercurrent_rate", "supercurrent",
      "momentum-space decay rate of a persistent current",
      supercurrent_decay_rate(p).in(un::per_s), 4.4e-27, TolKind::Relative,
      0.15, "s^-1");
  add(rows, "supercurrent_multiplier", "supercurrent",
      "enhancement at which observed persistence would fail",
      supercurrent_bound(p).multiplier_vs_standard, 1e14, TolKind::LogDecades,
      0.3, "1");
  add(rows, "supercurrent_rate_enhanced", "supercurrent",
      "decay rate at the moderate enhanced case",
      supercurrent_decay_rate(CslParams::case_i()).in(un::per_s), 1e-19,
      TolKind::LogDecades, 0.301, "s^-1");
}

void excitation_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  add(rows, "hydrogen_excitation_rate", "excitation",
      "bound-state excitation rate of atomic hydrogen",
      excitation_rate(p, ExcitationTarget::hydrogen()).in(un::per_s), 0.7e-35,
      TolKind::Relative, 0.30, "s^-1");
  add(rows, "hydrogen_multiplier", "excitation",
      "enhancement bounded by null hydrogen excitation",
      excitation_bound(p, ExcitationTarget::hydrogen()).multiplier_vs_standard,
      4e17, TolKind::Relative, 0.15, "1");
  ExcitationTarget raw = ExcitationTarget::proton_constituent();
  raw.selection_suppression = 1.0;
  add(rows, "proton_constituent_rate", "excitation",
      "proton excitation rate with constituent-quark masses, no selection "
      "suppression",
      excitation_rate(p, raw).in(un::per_s), 1e-50, TolKind::LogDecades, 1.0,
      "s^-1");
  add(rows, "proton_current_rate", "excitation",
      "proton excitation rate with current-quark masses",
      excitation_rate(p, ExcitationTarget::proton_current()).in(un::per_s),
      1e-53, TolKind::LogDecades, 1.0, "s^-1");
  add(rows, "proton_multiplier", "excitation",
      "minimum enhancement that proton stability tolerates",
      excitation_bound(p, ExcitationTarget::proton_constituent())
          .multiplier_vs_standard,
      1e18, TolKind::AtLeast, 0.0, "1");
  add(rows, "ge_excitation_bound", "excitation",
      "rate ceiling from quiescent germanium nuclear levels",
      excitation_bound(p, ExcitationTarget::germanium_nuclear())
          .lambda_bound.in(un::per_s),
      6e-3, TolKind::Relative, 0.20, "s^-1");
  add(rows, "quadrupole_catalog_multiplier", "excitation",
      "catalog entry: published quadrupole-excitation analysis, quoted "
      "enhancement ceiling",
      1e14, 1e14, TolKind::Fixture, 0.0, "1");
}

void radiation_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  add(rows, "radiation_ge_bound", "radiation_ge",
      "rate ceiling from the quiet-counting x-ray bin",
      ge_radiation_bound(p).lambda_bound.in(un::per_s), 1.7e-11,
      TolKind::LogDecades, 0.301, "s^-1");
  add(rows, "radiation_neutralized_multiplier", "radiation_ge",
      "same ceiling after charge-neutralization suppression",
      ge_radiation_bound(p, GeDetector{}, true).multiplier_vs_standard, 1e12,
      TolKind::LogDecades, 1.0, "1");
  add(rows, "radiation_published_gap", "radiation_ge",
      "catalog entry: decade gap above the published spectrum-shape "
      "analysis, unresolved",
      1e3, 1e3, TolKind::Fixture, 0.0, "1");
}

void cmb_rows(std::vector<AnchorRow>& rows, const RunConfig& cfg) {
  const CslParams p = CslParams::standard();
  const Constants& k = constants();
  add(rows, "cmb_multiplier", "cmb",
      "enhancement the thermalized-photon budget tolerates",
      cmb_budget_bound(p, 1e9, 0.1, cfg.cmb_window_s * un::s)
          .multiplier_vs_standard,
      1e12, TolKind::Relative, 0.25, "1");
  const Qty gained = heating_rate(p, k.m_N) * (cfg.cmb_window_s * un::s);
  add(rows, "cmb_energy_gain", "cmb",
      "energy gained per nucleon over the budget window",
      gained.in(k.eV), 2e-8, TolKind::Relative, 0.10, "eV");
  add(rows, "cmb_temperature_equiv", "cmb",
      "same gain as an equivalent temperature",
      (gained / (1.5 * k.k_B)).in(un::K), 2e-4, TolKind::Relative, 0.25, "K");
}

void igm_rows(std::vector<AnchorRow>& rows, const RunConfig& cfg) {
  const CslParams p = CslParams::standard();
  const Constants& k = constants();
  const Cosmology c = Cosmology::standard();
  const Qty dtdz = lookback_derivative(c, 3.0);
  add(rows, "igm_lookback", "igm",
      "lookback-time derivative at the probed epoch",
      dtdz.in(un::year()) / 1e9, 0.8, TolKind::Relative, 0.05, "Gyr");
  const IgmState z3{3.0, 2e4 * un::K};
  add(rows, "igm_cooling_rate", "igm",
      "adiabatic cooling rate per particle of the probed gas",
      (3.0 * k.k_B * z3.temperature / (1.0 + z3.z) / dtdz)
          .in(k.eV * un::per_s),
      0.5e-16, TolKind::Relative, 0.10, "eV s^-1");
  add(rows, "igm_multiplier", "igm",
      "enhancement at which collapse heating overwhelms the cooling",
      igm_bound(p, c, z3).multiplier_vs_standard, 8e8, TolKind::Relative,
      0.25, "1");
  const IgmState z0{0.06, 5011.872336272722 * un::K};
  add(rows, "igm_z0_multiplier", "igm_z0",
      "enhancement tolerated by the coolest observed recent gas",
      igm_bound(p, c, z0, cfg.igm_z0_age_s * un::s).multiplier_vs_standard,
      std::pow(10.0, 7.2), TolKind::LogDecades, 0.5, "1");
  add(rows, "igm_combined_multiplier", "igm_combined",
      "decade-averaged combination of the two gas epochs",
      igm_combined_bound(p, c, z3, z0, cfg.igm_z0_age_s * un::s)
          .multiplier_vs_standard,
      1e8, TolKind::LogDecades, 1.0, "1");
  add(rows, "igm_rc4_multiplier", "igm_rc4",
      "gas-heating ceiling at a tenfold correlation length",
      igm_bound(CslParams::make(p.lambda, 1e-4 * un::cm), c, z3)
          .multiplier_vs_standard,
      1e10, TolKind::LogDecades, 1.0, "1");
}

void dust_rows(std::vector<AnchorRow>& rows, const RunConfig& cfg) {
  const CslParams p = CslParams::standard();
  const Constants& k = constants();
  const Qty tg = cfg.dust_grain_temperature_k * un::K;
  add(rows, "dust_radiated_power", "dust",
      "volumetric thermal emission of cold grain material",
      dust_radiated_power_density(tg, cfg.dust_kappa_prime)
          .in(k.eV * un::per_s * un::per_cm3),
      2e14, TolKind::Relative, 0.25, "eV s^-1 cm^-3");
  add(rows, "dust_csl_heating", "dust",
      "volumetric collapse heating of the same material",
      heating_rate(p, k.m_N).in(k.eV * un::per_s) * 1e24, 7e-2,
      TolKind::Relative, 0.10, "eV s^-1 cm^-3");
  add(rows, "dust_multiplier", "dust",
      "enhancement at which grains would outglow their emission",
      dust_grain_bound(p, tg, cfg.dust_kappa_prime).multiplier_vs_standard,
      1e15, TolKind::LogDecades, 0.75, "1");
}

void planetary_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  const ChannelResult plan = planetary_bound(p);
  add(rows, "planetary_multiplier", "planetary",
      "enhancement matching the measured planetary heat outflow (disavowed "
      "as a bound)",
      plan.multiplier_vs_standard, 5e5, TolKind::Relative, 0.25, "1");
  const ChannelResult igm_limit =
      igm_bound(p, Cosmology::standard(), IgmState{3.0, 2e4 * un::K});
  add(rows, "planetary_collision_decades", "planetary",
      "decades by which ambient collisions out-localize collapse noise even "
      "at the gas-heating limit",
      planetary_collision_dominance_decades(
          CslParams::make(igm_limit.lambda_bound, p.r_c)),
      28.0, TolKind::Relative, 0.05, "1");
}

void phonon_rows(std::vector<AnchorRow>& rows) {
  const CslParams p = CslParams::standard();
  const LatticeModel l;
  const CarrierModel e = CarrierModel::electron();
  const long long n = 1000000000LL;
  const double ignored =
      electron_slowdown_reduction(p, l, e, n).in(un::per_s);
  const double quoted =
      electron_slowdown_reduction(p, l, e, n, PhononCoherence::QuotedAverage)
          .in(un::per_s);
  add(rows, "phonon_cascade_total", "phonon",
      "summed reduction factor of a full phonon emission cascade",
      ignored / p.lambda.in(un::per_s), 328.0, TolKind::Relative, 0.01, "1");
  add(rows, "phonon_coherence_average", "phonon",
      "thermally averaged short-wavelength coherence factor",
      quoted / ignored, 1e-3, TolKind::Relative, 0.20, "1");
  add(rows, "phonon_electron_rate", "phonon",
      "reduction rate carried by one slowing conduction electron",
      quoted, 1e-17, TolKind::LogDecades, 0.301, "s^-1");
  add(rows, "phonon_ion_suppression", "phonon",
      "phonon-emission suppression for a thermal heavy ion",
      ion_emission_suppression(CarrierModel::calibrated_heavy_ion(l), l),
      1e-65, TolKind::LogDecades, 3.0, "1");
  const double per_group =
      thermal_fluctuation_bound(p, l, n, 1).in(un::per_s);
  add(rows, "phonon_thermal_per_group", "phonon",
      "thermal-fluctuation over-bound per correlation group",
      per_group, 2e-9, TolKind::Relative, 0.30, "s^-1");
  add(rows, "phonon_thermal_track", "phonon",
      "same over-bound for a 20-group track",
      thermal_fluctuation_bound(p, l, n, 20).in(un::per_s), 4e-8,
      TolKind::Relative, 0.30, "s^-1");
}

void projection_rows(std::vector<AnchorRow>& rows) {
  const ParameterCase one = ParameterCase::case_one();
  const ParameterCase two = ParameterCase::case_two();
  const Qty t = 1.0 * un::s;
  const DiskGeometry disk1 = DiskGeometry::calibrated(one.params);
  const DiskGeometry disk2 = DiskGeometry::calibrated(two.params);
  add(rows, "rotation_ratio_moderate", "projections",
      "rotational diffusion over the angular quantum limit, per second",
      collett_pearle_ratio(one, disk1, t), 6.6e2, TolKind::Relative, 0.05,
      "1");
  add(rows, "rotation_ratio_strong", "projections",
      "same ratio at the strong enhanced case",
      collett_pearle_ratio(two, disk2, t), 1.8e4, TolKind::Relative, 0.05,
      "1");
  add(rows, "sql_angle_moderate", "projections",
      "angular quantum limit of the calibrated disk over one second",
      sql_angle(disk1.moment_of_inertia(), t).as_dimensionless(), 0.032,
      TolKind::Relative, 0.05, "rad");
  const Qty side = 1.0 * un::cm;
  const Qty density = 1.0 * un::g_per_cm3;
  const MirrorProjection m1 = mirror_projection(one, side, density);
  const MirrorProjection m2 = mirror_projection(two, side, density);
  add(rows, "mirror_multiplier_moderate", "projections",
      "growth of mirror center-of-mass decoherence over the conventional "
      "rate",
      m1.multiplier, 2e7, TolKind::Relative, 0.15, "1");
  add(rows, "mirror_multiplier_strong", "projections",
      "same growth at the strong enhanced case",
      m2.multiplier, 1.5e11, TolKind::Relative, 0.15, "1");
  add(rows, "fringe_damping_moderate", "projections",
      "interference fringe damping exponent, moderate case",
      m1.fringe_damping, 0.04, TolKind::Relative, 0.15, "1");
  add(rows, "fringe_damping_strong", "projections",
      "interference fringe damping exponent, strong case",
      m2.fringe_damping, 3e2, TolKind::Relative, 0.15, "1");

  const double expected_one[] = {1e-5, 3e-3, 0.02, 6e4};
  const double expected_two[] = {1e-1, 0.3, 1.4, 5e6};
  const auto fixtures_one = quoted_ratio_fixtures(one);
  const auto fixtures_two = quoted_ratio_fixtures(two);
  for (std::size_t i = 0; i < fixtures_one.size(); ++i) {
    const auto& f = fixtures_one[i];
    add(rows, "fixture_moderate_" + f.experiment + "_" + f.quantity,
        "projections",
        "stored instrument projection (inputs live outside this artifact)",
        f.value, expected_one[i], TolKind::Fixture, 0.0, "1");
  }
  for (std::size_t i = 0; i < fixtures_two.size(); ++i) {
    const auto& f = fixtures_two[i];
    add(rows, "fixture_strong_" + f.experiment + "_" + f.quantity,
        "projections",
        "stored instrument projection (inputs live outside this artifact)",
        f.value, expected_two[i], TolKind::Fixture, 0.0, "1");
  }
  const FixtureScalingAudit audit = fixture_scaling_audit();
  add(rows, "fixture_scaling_audit", "projections",
      "factor by which the recorded interferometer ratio departs from a "
      "pure parameter rescaling",
      audit.recorded_ratio / audit.implied_ratio, 2.0, TolKind::AtLeast, 0.0,
      "1");
}

void oracle_rows(std::vector<AnchorRow>& rows) {
  const auto checks = run_oracle_checks();
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  add(rows, "oracle_battery", "oracle",
      "fraction of independent numerical cross-checks passing",
      checks.empty() ? 0.0 : double(passed) / double(checks.size()), 1.0,
      TolKind::AtLeast, 0.0, "1");
}

}  // namespace

std::string tol_kind_name(TolKind k) {
  switch (k) {
    case TolKind::Relative: return "relative";
    case TolKind::LogDecades: return "log_decades";
    case TolKind::AtLeast: return "at_least";
    case TolKind::Fixture: return "fixture";
  }
  return "unknown";
}

bool row_passes(const AnchorRow& row, double tolerance_scale) {
  switch (row.kind) {
    case TolKind::Relative:
      if (row.expected == 0.0) return false;
      return std::fabs(row.computed / row.expected - 1.0) <=
             row.tolerance * tolerance_scale;
    case TolKind::LogDecades:
      if (row.computed <= 0.0 || row.expected <= 0.0) return false;
      return std::fabs(std::log10(row.computed / row.expected)) <=
             row.tolerance * tolerance_scale;
    case TolKind::AtLeast:
      return row.computed * tolerance_scale >= row.expected;
    case TolKind::Fixture:
      return std::fabs(row.computed - row.expected) <=
             1e-12 * std::max(1.0, std::fabs(row.expected));
  }
  return false;
}

Report build_report(const RunConfig& cfg) {
  Report rep;
  core_rows(rep.rows);
  photographic_rows(rep.rows);
  etched_rows(rep.rows);
  vision_rows(rep.rows);
  fullerene_rows(rep.rows, cfg);
  supercurrent_rows(rep.rows);
  excitation_rows(rep.rows);
  radiation_rows(rep.rows);
  cmb_rows(rep.rows, cfg);
  igm_rows(rep.rows, cfg);
  dust_rows(rep.rows, cfg);
  planetary_rows(rep.rows);
  phonon_rows(rep.rows);
  projection_rows(rep.rows);
  oracle_rows(rep.rows);
  rep.all_pass = true;
  for (auto& row : rep.rows) {
    row.pass = row_passes(row, cfg.tolerance_scale);
    rep.all_pass = rep.all_pass && row.pass;
  }
  return rep;
}

Report filter_report(const Report& r, const std::string& channel) {
  Report out;
  out.all_pass = true;
  for (const auto& row : r.rows) {
    if (row.channel != channel) continue;
    out.rows.push_back(row);
    out.all_pass = out.all_pass && row.pass;
  }
  return out;
}

std::string report_to_text(const Report& r) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-4s  %-34s  %13s  %13s  %-12s  %s\n",
                "ok", "id", "computed", "expected", "check", "unit");
  out += line;
  std::size_t passed = 0;
  for (const auto& row : r.rows) {
    char check[64];
    switch (row.kind) {
      case TolKind::Relative:
        std::snprintf(check, sizeof check, "rel %.3g", row.tolerance);
        break;
      case TolKind::LogDecades:
        std::snprintf(check, sizeof check, "dec %.3g", row.tolerance);
        break;
      case TolKind::AtLeast:
        std::snprintf(check, sizeof check, "at least");
        break;
      case TolKind::Fixture:
        std::snprintf(check, sizeof check, "fixture");
        break;
    }
    std::snprintf(line, sizeof line, "%-4s  %-34s  %13.6g  %13.6g  %-12s  %s\n",
                  row.pass ? "PASS" : "FAIL", row.id.c_str(), row.computed,
                  row.expected, check, row.unit.c_str());
    out += line;
    passed += row.pass ? 1 : 0;
  }
  std::snprintf(line, sizeof line, "%zu/%zu rows pass\n", passed,
                r.rows.size());
  out += line;
  return out;
}

std::string report_to_json(const Report& r) {
  nlohmann::json j;
  auto rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"id", row.id},
                    {"channel", row.channel},
                    {"description", row.description},
                    {"computed", row.computed},
                    {"expected", row.expected},
                    {"check", tol_kind_name(row.kind)},
                    {"tolerance", row.tolerance},
                    {"unit", row.unit},
                    {"pass", row.pass}});
  }
  j["rows"] = std::move(rows);
  j["all_pass"] = r.all_pass;
  return j.dump(2) + "\n";
}

}  // namespace csl
