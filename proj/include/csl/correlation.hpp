// Localization correlation kernels g(x), their self-convolutions
// G(y) = Int d3x g(y-x) g(-x), and the curvature of G at the origin, which
// fixes the stochastic-heating coefficient. All kernels are isotropic, so
// everything reduces to functions of s = |x|/r_C and the three-dimensional
// convolution collapses to a one-dimensional radial integral.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csl/quadrature.hpp"
#include "csl/units.hpp"

namespace csl {

enum class CorrelationKind { Gaussian, Exponential, CustomRadial };

/// Tabulated radial profile in reduced units: u(s) with s = r/r_C.
/// Linearly interpolated; u is rescaled at construction so the kernel
/// normalizes to unit integral.
struct RadialProfile {
  std::vector<double> s;
  std::vector<double> u;
};

/// Loads a two-column text profile (s  u per line, '#' comments allowed).
/// Requires s[0] == 0, strictly increasing s, non-negative finite u.
RadialProfile load_radial_profile(const std::string& path);

class CorrelationKernel {
 public:
  static CorrelationKernel gaussian(Qty r_c);
  static CorrelationKernel exponential(Qty r_c);
  /// Tabulated kernel; knots beyond the truncation radius 12 r_C are
  /// dropped and the profile is normalized on construction.
  static CorrelationKernel custom(Qty r_c, RadialProfile profile);

  CorrelationKind kind() const { return kind_; }
  Qty r_c() const { return r_c_; }
  bool has_closed_form() const { return kind_ != CorrelationKind::CustomRadial; }
  /// Radius (in units of r_C) beyond which the kernel is treated as zero.
  double truncation_radius() const { return trunc_; }

  /// g(|x|), dimension cm^-3.
  Qty evaluate(Qty x) const;

  /// G(|y|), dimension cm^-3; closed form where available, else quadrature
  /// at the default tolerance.
  Qty self_convolution(Qty y) const;

  /// G(|y|) by radial-reduction quadrature for any kernel kind.
  /// spec.abs_tol is interpreted as a fraction of G(0).
  Qty self_convolution_numeric(Qty y, const QuadratureSpec& spec = {1e-10, 1e-10, 48}) const;

  /// -laplacian G at y = 0, dimension cm^-5; closed form where available,
  /// exact piecewise sum for tabulated kernels.
  Qty curvature_at_origin() const;

  /// -laplacian G(0) through the gradient-square identity
  /// -lap G(0) = Int d3x |grad g|^2, evaluated by quadrature.
  Qty curvature_numeric(const QuadratureSpec& spec = {1e-12, 1e-11, 48}) const;

  // Reduced-unit internals, exposed for oracle cross-checks and tests.
  double shape(double s) const;            ///< u(s), g = u(s)/r_C^3
  double shape_gradient(double s) const;   ///< du/ds
  double cumulative_moment(double t) const;  ///< Int_0^t tau u(tau) dtau
  double reduced_self_convolution(double s) const;          ///< closed form
  double reduced_self_convolution_numeric(double s, const QuadratureSpec& spec) const;
  double reduced_curvature() const;

 private:
  CorrelationKernel(CorrelationKind kind, Qty r_c, double trunc)
      : kind_(kind), r_c_(std::move(r_c)), trunc_(trunc) {}

  CorrelationKind kind_;
  Qty r_c_;
  double trunc_;
  RadialProfile profile_;        // CustomRadial only, normalized
  std::vector<double> moment_;   // cumulative moment at knots
  std::vector<double> slope_;    // per-segment du/ds
};

/// Self-convolution summary used by the oracle layer.
struct ConvolutionResult {
  Qty value_at_origin;                       ///< G(0)
  Qty curvature_at_origin;                  ///< -lap G(0)
  std::vector<std::pair<double, Qty>> samples;  ///< (s, G(s r_C))
};

ConvolutionResult tabulate_self_convolution(const CorrelationKernel& k,
                                            const std::vector<double>& s_values,
                                            const QuadratureSpec& spec = {1e-10, 1e-10, 48});

}  // namespace csl
