// Independent verification layer: recomputes the closed-form rates through
// the correlation-kernel route (quadrature self-convolution, finite
// difference curvature, simulated off-diagonal decay) so the regression
// suite never checks a formula against itself.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csl/correlation.hpp"
#include "csl/cslcore.hpp"
#include "csl/quadrature.hpp"
#include "csl/units.hpp"

namespace csl {

/// Exponential decay extracted from a simulated off-diagonal element.
struct DecayFit {
  Qty rate;
  double r_squared = 0.0;
  double efolds = 0.0;  ///< decay depth covered by the fitted window
};

/// One-dimensional coordinate grid for the density-matrix decay check.
struct GridSpec {
  Qty spacing;                  ///< site separation
  int points = 64;              ///< sites per axis
  Qty horizon{0.0, dim::time};  ///< integration time; <= 0 picks ~3 e-folds
  int steps = 4096;             ///< fixed RK4 steps over the horizon
  int samples = 128;            ///< points entering the log-linear fit
};

/// gamma [G(0) - G(separation)] with G evaluated by radial quadrature.
/// Only the kernels with closed forms are accepted here; tabulated kernels
/// go through the CorrelationKernel overload.
Qty decoherence_rate_from_kernel(const CslParams& p, CorrelationKind kind,
                                 Qty separation,
                                 const QuadratureSpec& spec = {1e-10, 1e-10,
                                                               48});
Qty decoherence_rate_from_kernel(const CslParams& p,
                                 const CorrelationKernel& k, Qty separation,
                                 const QuadratureSpec& spec = {1e-10, 1e-10,
                                                               48});

/// Curvature of the self-convolution at the origin by centered second
/// difference with Richardson extrapolation. The step sits at the fourth
/// root of machine epsilon, which balances truncation against cancellation
/// for a second difference; the returned uncertainty is the spread between
/// the two extrapolation levels.
struct CurvatureEstimate {
  Qty value;               ///< -laplacian G at 0, cm^-5
  double step;             ///< reduced-unit step actually used
  double rel_uncertainty;  ///< spread between extrapolation levels
};

CurvatureEstimate finite_difference_curvature(const CorrelationKernel& k);

/// (hbar^2 gamma / (2 m_N^2)) * mass * curvature, with the curvature from
/// the finite-difference route above. Throws if the difference scheme is
/// unstable (uncertainty above 1e-4).
Qty heating_from_kernel(const CslParams& p, CorrelationKind kind, Qty mass);

/// Evolves the off-diagonal element for the site pair under pure
/// decoherence (free Hamiltonian off: it would only dephase, not change the
/// modulus decay), fits an exponential, and reports the fit quality.
/// Throws if the horizon covers less than two e-folds of decay.
DecayFit grid_decay_fit(const CslParams& p, CorrelationKind kind,
                        const GridSpec& g, std::pair<int, int> pair,
                        RateConvention convention = RateConvention::DensityMatrix);

/// Least-squares polynomial coefficients (ascending powers), solved by
/// normal equations in extended precision.
std::vector<double> fit_polynomial(const std::vector<double>& x,
                                   const std::vector<double>& y, int degree);

/// One verification row: a kernel-route value against its closed-form
/// target. `absolute` rows compare |computed| against the tolerance
/// directly (used for coefficients whose target is zero).
struct OracleCheck {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double deviation = 0.0;  ///< relative, or |computed| for absolute rows
  double tolerance = 0.0;
  bool absolute = false;
  bool pass = false;
};

/// Runs the full verification battery at the given parameters.
std::vector<OracleCheck> run_oracle_checks(
    const CslParams& p = CslParams::standard());

}  // namespace csl
