// Forward predictions under enhanced parameter choices: rotational diffusion
// of a small disk against the standard quantum limit, decoherence of a
// superposed mirror, and the per-case instrument projections the enhanced
// cases were quoted with.
#pragma once

#include <string>
#include <vector>

#include "csl/cslcore.hpp"
#include "csl/units.hpp"

namespace csl {

enum class CaseLabel { Standard, CaseI, CaseII, Custom };

struct ParameterCase {
  CaseLabel label = CaseLabel::Standard;
  CslParams params = CslParams::standard();

  static ParameterCase standard();
  static ParameterCase case_one();
  static ParameterCase case_two();
  static ParameterCase custom(const CslParams& p);
};

/// Thin disk used for the rotational-diffusion comparison. The rotation
/// factor is the calibrated value for radius = 2 r_C, thickness = r_C/2;
/// the general shape function is out of scope.
struct DiskGeometry {
  Qty radius;
  Qty thickness;
  Qty nucleon_density = 1e24 * un::per_cm3;
  double rotation_factor = 1.0 / 3.0;

  static DiskGeometry calibrated(const CslParams& p);

  /// rho pi L^2 b with rho the nucleon mass density.
  Qty mass() const;
  /// M L^2 / 4, the moment about a diameter.
  Qty moment_of_inertia() const;
};

/// Standard quantum limit sqrt(hbar t / I) for an angle measurement after
/// time t, from minimizing (initial accuracy)^2 + (back-action spread)^2.
Qty sql_angle(Qty inertia, Qty t);

/// Standard quantum limit sqrt(hbar t / M) for a coordinate measurement.
Qty sql_position(Qty mass, Qty t);

/// RMS collapse-driven rotational diffusion over the angle SQL:
/// sqrt(hbar f I lambda / 12) * t / (m_N r_C^2). Grows linearly in t.
double collett_pearle_ratio(const ParameterCase& c, const DiskGeometry& d,
                            Qty t);

/// Same ratio with the moment of inertia supplied directly, for scaling
/// studies that vary I away from the disk shape.
double collett_pearle_ratio_from_inertia(const CslParams& p,
                                         double rotation_factor, Qty inertia,
                                         Qty t);

/// Decoherence of a superposed cube of side S and mass density D.
struct MirrorProjection {
  Qty eta;                  // cm^-2 s^-1
  double multiplier;        // eta over its value at standard parameters
  double fringe_damping;    // damping exponent, calibrated baseline
  bool order_unity_corrections;  // side not much larger than r_C
};

MirrorProjection mirror_projection(const ParameterCase& c, Qty side,
                                   Qty mass_density);

/// Published instrument sensitivities for the enhanced cases. These are
/// per-case calibrated fixtures: the quoted numbers are not pure
/// (lambda, r_C) rescalings of each other (see fixture_scaling_audit), so
/// they are stored with their anchors rather than derived.
struct InstrumentProjection {
  std::string experiment;
  std::string quantity;
  double value;
  Qty horizon;  // averaging time the quote refers to; zero where n/a
};

std::vector<InstrumentProjection> quoted_ratio_fixtures(
    const ParameterCase& c);

/// Documents why the instrument fixtures are stored per case: the recorded
/// case-II/case-I ratio for the interferometer row is far from the
/// sqrt(lambda)/r_C rescaling that a single underlying formula would give.
struct FixtureScalingAudit {
  double implied_ratio;   // sqrt(lambda_II/lambda_I) * r_C,I/r_C,II
  double recorded_ratio;  // quoted case-II value over quoted case-I value
  bool pure_rescaling;    // true only if the two agree
};

FixtureScalingAudit fixture_scaling_audit();

}  // namespace csl
