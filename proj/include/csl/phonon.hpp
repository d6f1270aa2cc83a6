// Acoustic-phonon channels: reduction triggered by single-phonon emission
// from hot carriers, the coherence suppression of sub-r_C wavelengths, the
// exponential cutoff for heavy carriers, and the thermal-fluctuation
// worst case. Closed forms are backed by numerical double integrals.
#pragma once

#include "csl/cslcore.hpp"
#include "csl/quadrature.hpp"
#include "csl/units.hpp"

namespace csl {

struct LatticeModel {
  Qty sound_speed = 3e5 * un::cm_per_s;
  Qty debye_frequency = 3e13 * un::per_s;
  Qty atom_mass = 100.0 * constants().m_N;
  Qty nucleon_density = 1e24 * un::per_cm3;
  Qty temperature = 300.0 * un::K;
};

/// Throws unless all fields are positive and the Debye wavelength
/// 2 pi c_s / omega_D exceeds the lattice spacing implied by the density.
void validate_lattice(const LatticeModel& l);

struct CarrierModel {
  Qty effective_mass;
  /// Initial wave number of the slowing carrier; zero means effectively
  /// unbounded (the 1/k0 endpoint terms are dropped).
  Qty k0{0.0, dim::wavevector};

  static CarrierModel electron();
  static CarrierModel heavy_ion(double atomic_weight = 100.0);
  /// Mass 300 k_B T / c_s^2, which puts the threshold exactly ten thermal
  /// wave numbers out: the baseline behind the quoted ~1e-65 suppression.
  static CarrierModel calibrated_heavy_ion(const LatticeModel& l);
};

/// Mean thermal wave number sqrt(3 m k_B T)/hbar.
Qty thermal_wavenumber(const CarrierModel& c, const LatticeModel& l);

/// Phonon-emission threshold m c_s/hbar; emission stops below it.
Qty emission_threshold_wavenumber(const CarrierModel& c, const LatticeModel& l);

/// Reduction probability contributed by one emitted phonon of frequency
/// omega spread over n nucleons per correlation cell:
/// f = hbar n / (4 r_C^2 m_N omega), times the coherence factor
/// G = min[1, (2 pi c_s/(r_C omega))^3] when flagged.
double phonon_mode_rate_factor(const CslParams& p, const LatticeModel& l,
                               long long n, Qty omega, bool with_coherence);

enum class PhononCoherence {
  Ignored,        ///< bare f integrated over the cascade
  QuotedAverage,  ///< f_tot times (pi/(r_C k_th))^2, the published shortcut
  Resolved,       ///< G carried inside the integral, exact closed form
};

/// Total reduction rate accumulated while one carrier radiates phonons down
/// from k0 to the emission threshold, lambda times f_tot. The QuotedAverage
/// and Resolved treatments differ by ~1.6% at the electron defaults but
/// diverge strongly when k0 approaches k_th; the resolved form and the
/// numeric integral are authoritative.
Qty electron_slowdown_reduction(
    const CslParams& p, const LatticeModel& l, const CarrierModel& c,
    long long n, PhononCoherence coherence = PhononCoherence::Ignored);

/// Same quantity via adaptive quadrature of the cascade double integral
/// with the deformation-potential emission shape R(k,q) = (5/16) sigma q^2/k.
/// sigma must cancel; it is exposed only so tests can prove that it does.
/// Requires a finite k0.
Qty electron_slowdown_reduction_numeric(const CslParams& p,
                                        const LatticeModel& l,
                                        const CarrierModel& c, long long n,
                                        bool with_coherence,
                                        double sigma = 1.0,
                                        const QuadratureSpec& spec = {});

/// exp(-1.5 k_min^2/k_th^2): the fraction of thermal carriers fast enough
/// to emit at all. Near one for electrons, astronomically small for ions.
double ion_emission_suppression(const CarrierModel& c, const LatticeModel& l);

/// Coherence factor averaged over the classically occupied Debye spectrum,
/// (1/omega_D) int_0^omega_D G domega, by quadrature. The closed form
/// 3 pi c_s/(r_C omega_D) is what thermal_fluctuation_bound uses.
double debye_coherence_average(const CslParams& p, const LatticeModel& l,
                               const QuadratureSpec& spec = {});

/// Thermal lattice fluctuations treated as if every displaced cell reduced
/// coherently: 2 lambda (9/4) k_B T n^2 N / (r_C^2 M omega_D^2) times the
/// Debye coherence average. An overestimate by construction; real
/// fluctuations are stationary noise, not completed measurements.
Qty thermal_fluctuation_bound(const CslParams& p, const LatticeModel& l,
                              long long n, long long big_n);

}  // namespace csl
