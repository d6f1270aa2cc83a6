#include "csl/phonon.hpp"

#include <cmath>
#include <stdexcept>

namespace csl {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(const Qty& q, const char* what) {
  if (q.value() <= 0.0) {
    throw std::domain_error(std::string(what) + " must be positive");
  }
}

// (5/64) hbar n / (r_C^2 m_N c_s): the cascade prefactor with R(k,q)'s
// 5/16 and f's 1/4 folded together. Carries one inverse length that the
// integrated 1/k terms cancel.
double cascade_prefactor(const CslParams& p, const LatticeModel& l,
                         long long n) {
  const Constants& k = constants();
  return (5.0 / 64.0) * ((k.hbar * static_cast<double>(n)) /
                         (p.r_c * p.r_c * k.m_N * l.sound_speed))
                            .in(un::per_cm);
}

}  // namespace

void validate_lattice(const LatticeModel& l) {
  require_positive(l.sound_speed, "sound speed");
  require_positive(l.debye_frequency, "Debye frequency");
  require_positive(l.atom_mass, "atom mass");
  require_positive(l.nucleon_density, "nucleon density");
  require_positive(l.temperature, "temperature");
  const Qty debye_wavelength = 2.0 * kPi * l.sound_speed / l.debye_frequency;
  const Qty atom_density =
      l.nucleon_density * (constants().m_N / l.atom_mass).as_dimensionless();
  const double spacing = std::cbrt(1.0 / atom_density.value());
  if (debye_wavelength.in(un::cm) <= spacing) {
    throw std::domain_error(
        "lattice model: Debye wavelength must exceed the lattice spacing");
  }
}

CarrierModel CarrierModel::electron() {
  return CarrierModel{constants().m_e};
}

CarrierModel CarrierModel::heavy_ion(double atomic_weight) {
  if (atomic_weight <= 0.0) {
    throw std::domain_error("atomic weight must be positive");
  }
  return CarrierModel{atomic_weight * constants().amu};
}

CarrierModel CarrierModel::calibrated_heavy_ion(const LatticeModel& l) {
  return CarrierModel{300.0 * constants().k_B * l.temperature /
                      (l.sound_speed * l.sound_speed)};
}

Qty thermal_wavenumber(const CarrierModel& c, const LatticeModel& l) {
  require_positive(c.effective_mass, "carrier mass");
  require_positive(l.temperature, "temperature");
  const Constants& k = constants();
  return sqrt_qty(3.0 * c.effective_mass * k.k_B * l.temperature) / k.hbar;
}

Qty emission_threshold_wavenumber(const CarrierModel& c,
                                  const LatticeModel& l) {
  require_positive(c.effective_mass, "carrier mass");
  return c.effective_mass * l.sound_speed / constants().hbar;
}

double phonon_mode_rate_factor(const CslParams& p, const LatticeModel& l,
                               long long n, Qty omega, bool with_coherence) {
  require_dim(omega, dim::rate, "phonon frequency");
  require_positive(omega, "phonon frequency");
  if (n < 1) throw std::domain_error("nucleon count must be positive");
  const Constants& k = constants();
  double f = ((k.hbar * static_cast<double>(n)) /
              (4.0 * p.r_c * p.r_c * k.m_N * omega))
                 .as_dimensionless();
  if (with_coherence) {
    const double x =
        (2.0 * kPi * l.sound_speed / (p.r_c * omega)).as_dimensionless();
    f *= std::min(1.0, x * x * x);
  }
  return f;
}

Qty electron_slowdown_reduction(const CslParams& p, const LatticeModel& l,
                                const CarrierModel& c, long long n,
                                PhononCoherence coherence) {
  validate_lattice(l);
  if (n < 1) throw std::domain_error("nucleon count must be positive");
  const double k_th = thermal_wavenumber(c, l).in(un::per_cm);
  const double k_min = emission_threshold_wavenumber(c, l).in(un::per_cm);
  if (k_min >= k_th) {
    throw std::domain_error(
        "slow-down cascade requires the thermal wave number to exceed the "
        "emission threshold");
  }
  const double k0 = c.k0.in(un::per_cm);
  if (k0 < 0.0) throw std::domain_error("k0 must be non-negative");
  if (k0 != 0.0 && k0 < k_th) {
    throw std::domain_error("k0 must not be below the thermal wave number");
  }
  const bool unbounded = k0 == 0.0;
  const double pref = cascade_prefactor(p, l, n);

  double f_tot = 0.0;
  switch (coherence) {
    case PhononCoherence::Ignored:
    case PhononCoherence::QuotedAverage: {
      f_tot = 2.0 * pref * (1.0 / k_th - (unbounded ? 0.0 : 1.0 / k0));
      if (coherence == PhononCoherence::QuotedAverage) {
        const double g = kPi / (p.r_c.in(un::cm) * k_th);
        f_tot *= g * g;
      }
      break;
    }
    case PhononCoherence::Resolved: {
      // Outer integrand pref 1/k^4 int q G dq; the inner moment switches
      // branch at 2k = q_c, so the outer antiderivative splits at q_c/2.
      const double q_c = 2.0 * kPi / p.r_c.in(un::cm);
      auto plain = [&](double lo, double hi_inv) {
        // int 2 k^-2 dk from lo, with hi given as 1/hi (0 for unbounded)
        return 2.0 * (1.0 / lo - hi_inv);
      };
      auto damped = [&](double lo, double hi) {
        const double lo3 = 1.0 / (lo * lo * lo);
        const double lo4 = lo3 / lo;
        const double hi3 = hi == 0.0 ? 0.0 : 1.0 / (hi * hi * hi);
        const double hi4 = hi == 0.0 ? 0.0 : hi3 / hi;
        return 0.5 * q_c * q_c * (lo3 - hi3) -
               0.125 * q_c * q_c * q_c * (lo4 - hi4);
      };
      const double split = 0.5 * q_c;
      if (k_th >= split) {
        f_tot = pref * damped(k_th, unbounded ? 0.0 : k0);
      } else if (!unbounded && k0 <= split) {
        f_tot = pref * plain(k_th, 1.0 / k0);
      } else {
        f_tot = pref * (plain(k_th, 1.0 / split) +
                        damped(split, unbounded ? 0.0 : k0));
      }
      break;
    }
  }
  return p.lambda * f_tot;
}

Qty electron_slowdown_reduction_numeric(const CslParams& p,
                                        const LatticeModel& l,
                                        const CarrierModel& c, long long n,
                                        bool with_coherence, double sigma,
                                        const QuadratureSpec& spec) {
  validate_lattice(l);
  if (n < 1) throw std::domain_error("nucleon count must be positive");
  if (sigma <= 0.0) throw std::domain_error("sigma must be positive");
  const double k_th = thermal_wavenumber(c, l).in(un::per_cm);
  const double k_min = emission_threshold_wavenumber(c, l).in(un::per_cm);
  if (k_min >= k_th) {
    throw std::domain_error(
        "slow-down cascade requires the thermal wave number to exceed the "
        "emission threshold");
  }
  const double k0 = c.k0.in(un::per_cm);
  if (k0 <= k_th) {
    throw std::domain_error(
        "numeric cascade integral requires a finite k0 above the thermal "
        "wave number");
  }

  const Constants& k = constants();
  const double r_c = p.r_c.in(un::cm);
  const double q_c = 2.0 * kPi / r_c;
  // f(c_s q) with the mode count divided out; hbar n/(4 r_C^2 m_N c_s q).
  const double f_scale =
      ((k.hbar * static_cast<double>(n)) /
       (4.0 * p.r_c * p.r_c * k.m_N * l.sound_speed))
          .in(un::per_cm);

  QuadratureSpec inner_spec = spec;
  inner_spec.abs_tol = 0.0;  // pure relative control inside
  auto inner = [&](double kk) {
    auto integrand = [&](double q) {
      double g = 1.0;
      if (with_coherence && q > q_c) {
        const double x = q_c / q;
        g = x * x * x;
      }
      return (5.0 / 16.0) * sigma * q * q / kk * (f_scale / q) * g;
    };
    const double top = 2.0 * kk;
    if (!with_coherence || top <= q_c) {
      return integrate_or_throw(integrand, 0.0, top, inner_spec,
                                "phonon cascade inner integral");
    }
    return integrate_or_throw(integrand, 0.0, q_c, inner_spec,
                              "phonon cascade inner integral") +
           integrate_or_throw(integrand, q_c, top, inner_spec,
                              "phonon cascade inner tail");
  };
  auto outer = [&](double kk) {
    return inner(kk) / (sigma * kk * kk * kk);
  };
  const double f_tot = integrate_or_throw(outer, k_th, k0, spec,
                                          "phonon cascade outer integral");
  return p.lambda * f_tot;
}

double ion_emission_suppression(const CarrierModel& c, const LatticeModel& l) {
  const double ratio =
      (emission_threshold_wavenumber(c, l) / thermal_wavenumber(c, l))
          .as_dimensionless();
  return std::exp(-1.5 * ratio * ratio);
}

double debye_coherence_average(const CslParams& p, const LatticeModel& l,
                               const QuadratureSpec& spec) {
  validate_lattice(l);
  const double omega_d = l.debye_frequency.in(un::per_s);
  const double omega_c =
      (2.0 * kPi * l.sound_speed / p.r_c).in(un::per_s);
  auto g = [&](double w) {
    if (w <= omega_c) return 1.0;
    const double x = omega_c / w;
    return x * x * x;
  };
  if (omega_c >= omega_d) return 1.0;
  const double area =
      integrate_or_throw(g, 0.0, omega_c, spec, "Debye coherence, flat part") +
      integrate_or_throw(g, omega_c, omega_d, spec, "Debye coherence, tail");
  return area / omega_d;
}

Qty thermal_fluctuation_bound(const CslParams& p, const LatticeModel& l,
                              long long n, long long big_n) {
  validate_lattice(l);
  if (n < 1 || big_n < 1) throw std::domain_error("counts must be positive");
  const Constants& k = constants();
  // Equipartition displacement per Debye mode, omega^2 mode density with
  // three modes per atom, and the small-displacement rate combine into the
  // 9/4; classical occupation k_B T/(hbar omega) is what makes the spectrum
  // weighting flat and leaves the 3 pi c_s/(r_C omega_D) coherence average.
  const double nn = static_cast<double>(n);
  const double groups = static_cast<double>(big_n);
  const double occupation =
      ((k.k_B * l.temperature) /
       (p.r_c * p.r_c * l.atom_mass * l.debye_frequency * l.debye_frequency))
          .as_dimensionless();
  const double coherence =
      (3.0 * kPi * l.sound_speed / (p.r_c * l.debye_frequency))
          .as_dimensionless();
  return 2.0 * (9.0 / 4.0) * p.lambda * occupation * nn * nn * groups *
         coherence;
}

}  // namespace csl
