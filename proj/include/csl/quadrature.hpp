// Adaptive Gauss7/Kronrod15 quadrature with explicit achieved-error
// reporting. Every integral in the engine goes through this layer so that
// tolerance bookkeeping is uniform and failures are loud.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace csl {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 48;
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;       ///< accumulated error estimate
  bool converged = false;   ///< every panel met its tolerance before max_depth
  int depth_reached = 0;
  long evaluations = 0;
};

/// Thrown by the _or_throw wrappers when a panel hits max_depth without
/// meeting tolerance; message carries the achieved error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, const IntegralResult& partial)
      : std::runtime_error(what), result(partial) {}
  IntegralResult result;
};

using Integrand = std::function<double(double)>;

/// Integral of f over [a, b], bisecting panels until the Kronrod-Gauss
/// discrepancy meets the tolerance split across panels.
IntegralResult integrate(const Integrand& f, double a, double b,
                         const QuadratureSpec& spec = {});

/// Integral of f over [a, inf), mapped to [0,1) via x = a + scale*t/(1-t).
/// `scale` should be the decay length of the integrand.
IntegralResult integrate_to_infinity(const Integrand& f, double a, double scale,
                                     const QuadratureSpec& spec = {});

double integrate_or_throw(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec, const char* label);
double integrate_to_infinity_or_throw(const Integrand& f, double a, double scale,
                                      const QuadratureSpec& spec, const char* label);

}  // namespace csl
