// Core collapse-model parameter algebra and the master rate formulas:
// superposition reduction, stochastic heating, and charged-particle
// radiation, plus the charge-neutralization correction factor.
#pragma once

#include "csl/units.hpp"

namespace csl {

/// The two-parameter collapse model: per-nucleon reduction rate lambda and
/// noise correlation length r_C. Alternative parameterizations (gamma,
/// alpha, eta) are exposed as derived accessors.
struct CslParams {
  Qty lambda;  ///< s^-1
  Qty r_c;     ///< cm

  /// Validates dimensions and positivity.
  static CslParams make(Qty lambda, Qty r_c);
  /// Conventional values: lambda = 2.2e-17 s^-1, r_C = 1e-5 cm.
  static CslParams standard();
  /// Enhanced case I: lambda = 4e-10 s^-1 at standard r_C.
  static CslParams case_i();
  /// Enhanced case II: lambda = 3e-8 s^-1, r_C = 1e-4 cm.
  static CslParams case_ii();
  static CslParams from_gamma(Qty gamma, Qty r_c);

  Qty alpha() const;  ///< 1/r_C², cm^-2
  Qty gamma() const;  ///< 8 pi^{3/2} r_C³ lambda, cm³ s^-1
  Qty eta() const;    ///< small-displacement coupling lambda/(2 r_C²), cm^-2 s^-1
};

/// How the displacement enters the reduction rate.
enum class DisplacementMode {
  Exact,              ///< 1 - exp(-ell²/(4 r_C²))
  SmallDisplacement,  ///< leading term ell²/(4 r_C²); refused for ell > r_C
  Saturated,          ///< displacement >> r_C limit, factor 1
};

/// The density-matrix decay rate is the default; the variance-based
/// convention doubles it.
enum class RateConvention { DensityMatrix, Variance };

/// A superposed mass distribution: `groups` clusters separated by more than
/// r_C, each holding `nucleons_per_group` constituents of mass
/// mass_ratio * m_N, displaced by `displacement` between the two branches.
struct MassConfig {
  long long nucleons_per_group = 1;
  long long groups = 1;
  double mass_ratio = 1.0;
  Qty displacement{0.0, dim::length};
  DisplacementMode mode = DisplacementMode::Exact;
};

/// Reduction rate lambda n² N (m/m_N)² x mode factor.
Qty reduction_rate(const CslParams& p, const MassConfig& m,
                   RateConvention convention = RateConvention::DensityMatrix);

/// Secular energy gain rate (3/4) lambda hbar² M / (r_C² m_N²) of a body of
/// total mass M, erg/s.
Qty heating_rate(const CslParams& p, Qty total_mass);

/// White-noise mean-squared-acceleration accumulation rate
/// (3/2) hbar² lambda / (m² r_C²), cm² s^-3; feeding this through the
/// dipole radiation formula reproduces radiated_power_spectrum_for_mass.
Qty mean_squared_acceleration_rate(const CslParams& p, Qty mass);

/// Photon emission spectrum dGamma/dk = alpha_fs lambda (hbar c)² /
/// (pi r_C² (m c²)² k) for a charged particle of mass m; s^-1 erg^-1.
Qty radiated_power_spectrum_for_mass(const CslParams& p, Qty mass, Qty k_photon);

/// The nucleon-normalized spectrum (mass = m_N), the form used by the
/// germanium emission bound.
Qty radiated_power_spectrum(const CslParams& p, Qty k_photon);

/// Same spectrum computed through the small-displacement (eta) route;
/// must agree with radiated_power_spectrum_for_mass identically.
Qty radiated_power_spectrum_qmupl(const CslParams& p, Qty mass, Qty k_photon);

/// Integrated radiated power up to photon energy k_max, erg/s:
/// Int_0^kmax k dGamma/dk dk = alpha_fs lambda (hbar c)² k_max /
/// (pi r_C² (m c²)²).
Qty radiated_power_up_to(const CslParams& p, Qty mass, Qty k_max);

/// Photon count rate in an energy band, s^-1 (the 1/k spectrum integrates
/// to a log).
Qty emission_rate_in_band(const CslParams& p, Qty mass, Qty k_lo, Qty k_hi);

/// Suppression of the radiated spectrum when the emitter sits in a
/// neutral bound system of size a0 moving at v/c:
/// (a0/r_C)² + (v/c)² + (a0/r_C)(v/c).
double neutralization_correction(Qty a0, double v_over_c, const CslParams& p);

}  // namespace csl
