#include "csl/projections.hpp"

#include <cmath>
#include <stdexcept>

namespace csl {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Damping exponent of the reference interferometer at standard parameters;
// the enhanced-case exponents scale with eta from this baseline.
constexpr double kFringeDampingBaseline = 2e-9;

void require_positive(const Qty& q, const char* what) {
  if (!(q.value() > 0.0)) {
    throw std::domain_error(std::string(what) + " must be positive");
  }
}
}  // namespace

ParameterCase ParameterCase::standard() {
  return ParameterCase{CaseLabel::Standard, CslParams::standard()};
}

ParameterCase ParameterCase::case_one() {
  return ParameterCase{CaseLabel::CaseI, CslParams::case_i()};
}

ParameterCase ParameterCase::case_two() {
  return ParameterCase{CaseLabel::CaseII, CslParams::case_ii()};
}

ParameterCase ParameterCase::custom(const CslParams& p) {
  return ParameterCase{CaseLabel::Custom, p};
}

DiskGeometry DiskGeometry::calibrated(const CslParams& p) {
  DiskGeometry d;
  d.radius = 2.0 * p.r_c;
  d.thickness = 0.5 * p.r_c;
  return d;
}

Qty DiskGeometry::mass() const {
  require_positive(radius, "disk radius");
  require_positive(thickness, "disk thickness");
  require_positive(nucleon_density, "nucleon density");
  return nucleon_density * constants().m_N * kPi * radius * radius * thickness;
}

Qty DiskGeometry::moment_of_inertia() const { return mass() * radius * radius / 4.0; }

Qty sql_angle(Qty inertia, Qty t) {
  require_positive(inertia, "moment of inertia");
  require_dim(inertia, dim::mass + dim::length * 2, "moment of inertia");
  require_dim(t, dim::time, "time");
  if (t.value() < 0.0) throw std::domain_error("time must be non-negative");
  return sqrt_qty(constants().hbar * t / inertia);
}

Qty sql_position(Qty mass, Qty t) {
  require_positive(mass, "mass");
  require_dim(mass, dim::mass, "mass");
  require_dim(t, dim::time, "time");
  if (t.value() < 0.0) throw std::domain_error("time must be non-negative");
  return sqrt_qty(constants().hbar * t / mass);
}

double collett_pearle_ratio_from_inertia(const CslParams& p,
                                         double rotation_factor, Qty inertia,
                                         Qty t) {
  if (rotation_factor <= 0.0) {
    throw std::domain_error("rotation factor must be positive");
  }
  require_positive(inertia, "moment of inertia");
  require_dim(t, dim::time, "time");
  if (t.value() < 0.0) throw std::domain_error("time must be non-negative");
  const Constants& k = constants();
  const Qty core =
      sqrt_qty(k.hbar * rotation_factor * inertia * p.lambda / 12.0);
  return (core * t / (k.m_N * p.r_c * p.r_c)).as_dimensionless();
}

double collett_pearle_ratio(const ParameterCase& c, const DiskGeometry& d,
                            Qty t) {
  return collett_pearle_ratio_from_inertia(c.params, d.rotation_factor,
                                           d.moment_of_inertia(), t);
}

MirrorProjection mirror_projection(const ParameterCase& c, Qty side,
                                   Qty mass_density) {
  require_positive(side, "side");
  require_dim(side, dim::length, "side");
  require_positive(mass_density, "mass density");
  require_dim(mass_density, dim::mass_density, "mass density");

  const Constants& k = constants();
  const Qty number_density = mass_density / k.m_N;
  auto eta_at = [&](const CslParams& p) {
    return 8.0 * kPi * p.r_c * p.r_c * p.lambda * side * side *
           number_density * number_density;
  };
  MirrorProjection out;
  out.eta = eta_at(c.params);
  out.multiplier = ratio(out.eta, eta_at(CslParams::standard()));
  out.fringe_damping = kFringeDampingBaseline * out.multiplier;
  // Corrections of order unity apply once the superposed body is not much
  // larger than the correlation length; flagged, still computed.
  out.order_unity_corrections = side.value() < 10.0 * c.params.r_c.value();
  return out;
}

std::vector<InstrumentProjection> quoted_ratio_fixtures(
    const ParameterCase& c) {
  const Qty none{0.0, dim::time};
  switch (c.label) {
    case CaseLabel::CaseI:
      return {
          {"nanomechanical", "occupation_shift", 1e-5, none},
          {"nanomechanical", "rms_over_sql", 3e-3, none},
          {"ligo", "rms_over_sql", 0.02, (1.0 / 70.0) * un::s},
          {"lisa", "rms_over_sql", 6e4, 1e4 * un::s},
      };
    case CaseLabel::CaseII:
      return {
          {"nanomechanical", "occupation_shift", 1e-1, none},
          {"nanomechanical", "rms_over_sql", 0.3, none},
          {"ligo", "rms_over_sql", 1.4, (1.0 / 70.0) * un::s},
          {"lisa", "rms_over_sql", 5e6, 1e4 * un::s},
      };
    default:
      throw std::domain_error(
          "instrument projections are tabulated only for the enhanced cases");
  }
}

FixtureScalingAudit fixture_scaling_audit() {
  const CslParams one = CslParams::case_i();
  const CslParams two = CslParams::case_ii();
  FixtureScalingAudit audit;
  audit.implied_ratio =
      std::sqrt(ratio(two.lambda, one.lambda)) * ratio(one.r_c, two.r_c);
  double ligo_one = 0.0;
  double ligo_two = 0.0;
  for (const auto& f : quoted_ratio_fixtures(ParameterCase::case_one())) {
    if (f.experiment == "ligo") ligo_one = f.value;
  }
  for (const auto& f : quoted_ratio_fixtures(ParameterCase::case_two())) {
    if (f.experiment == "ligo") ligo_two = f.value;
  }
  audit.recorded_ratio = ligo_two / ligo_one;
  audit.pure_rescaling =
      std::abs(audit.implied_ratio / audit.recorded_ratio - 1.0) < 0.5;
  return audit;
}

}  // namespace csl
