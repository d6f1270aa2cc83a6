#include "csl/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace csl {
namespace {

const double kPi = 3.14159265358979323846;
// u(s) prefactors for unit-normalized kernels, g(x) = u(|x|/r_C)/r_C^3.
const double kGaussNorm = std::pow(2.0 * kPi, -1.5);
const double kExpNorm = 1.0 / (8.0 * kPi);
// Integration cap for the analytic kernels: both shapes are below 1e-20
// of their peak past s = 60, far under any tolerance used here.
const double kAnalyticCap = 60.0;
const double kCustomCap = 12.0;

// Exact integrals over one linear segment u(s) = a + b (s - s0), width h.
double segment_volume(double s0, double h, double a, double b) {
  return a * (s0 * s0 * h + s0 * h * h + h * h * h / 3.0) +
         b * (s0 * s0 * h * h / 2.0 + 2.0 * s0 * h * h * h / 3.0 +
              h * h * h * h / 4.0);
}

double segment_moment(double s0, double h, double a, double b) {
  return a * (s0 * h + h * h / 2.0) + b * (s0 * h * h / 2.0 + h * h * h / 3.0);
}

}  // namespace

RadialProfile load_radial_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open radial profile: " + path);
  RadialProfile p;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double s = 0.0;
    double u = 0.0;
    if (!(ls >> s)) continue;  // blank or comment-only line
    if (!(ls >> u)) {
      throw std::runtime_error("radial profile line needs two columns: " + line);
    }
    p.s.push_back(s);
    p.u.push_back(u);
  }
  if (p.s.size() < 2) {
    throw std::runtime_error("radial profile needs at least two points: " + path);
  }
  return p;
}

CorrelationKernel CorrelationKernel::gaussian(Qty r_c) {
  require_dim(r_c, dim::length, "correlation length");
  return CorrelationKernel(CorrelationKind::Gaussian, std::move(r_c), kAnalyticCap);
}

CorrelationKernel CorrelationKernel::exponential(Qty r_c) {
  require_dim(r_c, dim::length, "correlation length");
  return CorrelationKernel(CorrelationKind::Exponential, std::move(r_c), kAnalyticCap);
}

CorrelationKernel CorrelationKernel::custom(Qty r_c, RadialProfile profile) {
  require_dim(r_c, dim::length, "correlation length");
  const std::size_t n_in = profile.s.size();
  if (n_in != profile.u.size()) {
    throw std::invalid_argument("radial profile: mismatched column lengths");
  }
  if (n_in < 2) throw std::invalid_argument("radial profile: need at least two knots");
  if (profile.s.front() != 0.0) {
    throw std::invalid_argument("radial profile: first knot must be at s = 0");
  }
  for (std::size_t i = 0; i < n_in; ++i) {
    if (!std::isfinite(profile.s[i]) || !std::isfinite(profile.u[i]) ||
        profile.u[i] < 0.0) {
      throw std::invalid_argument("radial profile: knots must be finite, u >= 0");
    }
    if (i > 0 && profile.s[i] <= profile.s[i - 1]) {
      throw std::invalid_argument("radial profile: s must increase strictly");
    }
  }
  // Drop knots beyond the truncation radius; kernel is zero outside.
  std::size_t n = n_in;
  while (n > 2 && profile.s[n - 1] > kCustomCap) --n;
  profile.s.resize(n);
  profile.u.resize(n);

  CorrelationKernel k(CorrelationKind::CustomRadial, std::move(r_c),
                      profile.s.back());
  k.profile_ = std::move(profile);

  // Normalize to unit integral: 4 pi Int s^2 u ds = 1 exactly on segments.
  k.slope_.resize(n - 1);
  double volume = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = k.profile_.s[i + 1] - k.profile_.s[i];
    const double b = (k.profile_.u[i + 1] - k.profile_.u[i]) / h;
    k.slope_[i] = b;
    volume += segment_volume(k.profile_.s[i], h, k.profile_.u[i], b);
  }
  volume *= 4.0 * kPi;
  if (volume <= 0.0) throw std::invalid_argument("radial profile: zero total weight");
  for (auto& u : k.profile_.u) u /= volume;
  for (auto& b : k.slope_) b /= volume;

  k.moment_.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = k.profile_.s[i + 1] - k.profile_.s[i];
    k.moment_[i + 1] = k.moment_[i] + segment_moment(k.profile_.s[i], h,
                                                     k.profile_.u[i], k.slope_[i]);
  }
  return k;
}

double CorrelationKernel::shape(double s) const {
  switch (kind_) {
    case CorrelationKind::Gaussian:
      return kGaussNorm * std::exp(-0.5 * s * s);
    case CorrelationKind::Exponential:
      return kExpNorm * std::exp(-std::abs(s));
    case CorrelationKind::CustomRadial: {
      s = std::abs(s);
      if (s >= profile_.s.back()) return 0.0;
      const auto it = std::upper_bound(profile_.s.begin(), profile_.s.end(), s);
      const std::size_t i = static_cast<std::size_t>(it - profile_.s.begin()) - 1;
      return profile_.u[i] + slope_[i] * (s - profile_.s[i]);
    }
  }
  return 0.0;
}

double CorrelationKernel::shape_gradient(double s) const {
  switch (kind_) {
    case CorrelationKind::Gaussian:
      return -s * kGaussNorm * std::exp(-0.5 * s * s);
    case CorrelationKind::Exponential:
      return -kExpNorm * std::exp(-std::abs(s));
    case CorrelationKind::CustomRadial: {
      s = std::abs(s);
      if (s >= profile_.s.back()) return 0.0;
      const auto it = std::upper_bound(profile_.s.begin(), profile_.s.end(), s);
      return slope_[static_cast<std::size_t>(it - profile_.s.begin()) - 1];
    }
  }
  return 0.0;
}

double CorrelationKernel::cumulative_moment(double t) const {
  t = std::abs(t);
  switch (kind_) {
    case CorrelationKind::Gaussian:
      return kGaussNorm * (1.0 - std::exp(-0.5 * t * t));
    case CorrelationKind::Exponential:
      return kExpNorm * (1.0 - (1.0 + t) * std::exp(-t));
    case CorrelationKind::CustomRadial: {
      if (t >= profile_.s.back()) return moment_.back();
      const auto it = std::upper_bound(profile_.s.begin(), profile_.s.end(), t);
      const std::size_t i = static_cast<std::size_t>(it - profile_.s.begin()) - 1;
      return moment_[i] +
             segment_moment(profile_.s[i], t - profile_.s[i], profile_.u[i],
                            slope_[i]);
    }
  }
  return 0.0;
}

double CorrelationKernel::reduced_self_convolution(double s) const {
  s = std::abs(s);
  switch (kind_) {
    case CorrelationKind::Gaussian:
      return std::pow(4.0 * kPi, -1.5) * std::exp(-0.25 * s * s);
    case CorrelationKind::Exponential:
      return (1.0 + s + s * s / 3.0) * std::exp(-s) / (64.0 * kPi);
    case CorrelationKind::CustomRadial:
      throw DimensionError("no closed-form self-convolution for tabulated kernels");
  }
  return 0.0;
}

double CorrelationKernel::reduced_self_convolution_numeric(
    double s, const QuadratureSpec& spec) const {
  s = std::abs(s);
  const double cap = truncation_radius();
  // Tolerances are taken relative to the origin value, which every kernel
  // reaches its maximum at; for the origin itself use the pure relative mode.
  double origin;
  if (has_closed_form()) {
    origin = reduced_self_convolution(0.0);
  } else {
    QuadratureSpec seed = spec;
    seed.abs_tol = 0.0;
    origin = integrate_or_throw(
        [this](double t) {
          const double u = shape(t);
          return t * t * u * u;
        },
        0.0, cap, seed, "self-convolution at origin") * 4.0 * kPi;
  }
  if (s == 0.0 && !has_closed_form()) return origin;
  if (s == 0.0) {
    QuadratureSpec seed = spec;
    seed.abs_tol = spec.abs_tol * origin / (4.0 * kPi);
    return integrate_or_throw(
               [this](double t) {
                 const double u = shape(t);
                 return t * t * u * u;
               },
               0.0, cap, seed, "self-convolution at origin") *
           4.0 * kPi;
  }

  // Radial reduction of the 3-d convolution of an isotropic kernel:
  //   G(s) = (2 pi / s) Int_0^inf t u(t) [M(s + t) - M(|s - t|)] dt
  // with M the cumulative first moment of u. The integrand has a kink at
  // t = s, so the range is split there.
  const auto f = [this, s](double t) {
    const double u = shape(t);
    if (u == 0.0) return 0.0;
    return t * u * (cumulative_moment(s + t) - cumulative_moment(std::abs(s - t)));
  };
  QuadratureSpec part = spec;
  part.abs_tol = spec.abs_tol * origin * s / (2.0 * kPi);
  double total = 0.0;
  if (s < cap) {
    part.abs_tol *= 0.5;
    total += integrate_or_throw(f, 0.0, s, part, "self-convolution inner");
    total += integrate_or_throw(f, s, cap, part, "self-convolution outer");
  } else {
    total += integrate_or_throw(f, 0.0, cap, part, "self-convolution");
  }
  return 2.0 * kPi / s * total;
}

double CorrelationKernel::reduced_curvature() const {
  switch (kind_) {
    case CorrelationKind::Gaussian:
      return 1.5 * std::pow(4.0 * kPi, -1.5);
    case CorrelationKind::Exponential:
      return 1.0 / (64.0 * kPi);
    case CorrelationKind::CustomRadial: {
      // -lap G(0) = Int |grad g|^2 d3x = 4 pi Int s^2 u'^2 ds;
      // piecewise-constant slopes make the integral an exact sum.
      double acc = 0.0;
      for (std::size_t i = 0; i < slope_.size(); ++i) {
        const double s0 = profile_.s[i];
        const double s1 = profile_.s[i + 1];
        acc += slope_[i] * slope_[i] * (s1 * s1 * s1 - s0 * s0 * s0) / 3.0;
      }
      return 4.0 * kPi * acc;
    }
  }
  return 0.0;
}

Qty CorrelationKernel::evaluate(Qty x) const {
  require_dim(x, dim::length, "kernel argument");
  const double s = (x / r_c_).as_dimensionless();
  return Qty(shape(s), dim::none) / pow_int(r_c_, 3);
}

Qty CorrelationKernel::self_convolution(Qty y) const {
  require_dim(y, dim::length, "self-convolution argument");
  const double s = (y / r_c_).as_dimensionless();
  const double g = has_closed_form() ? reduced_self_convolution(s)
                                     : reduced_self_convolution_numeric(s, {1e-10, 1e-10, 48});
  return Qty(g, dim::none) / pow_int(r_c_, 3);
}

Qty CorrelationKernel::self_convolution_numeric(Qty y, const QuadratureSpec& spec) const {
  require_dim(y, dim::length, "self-convolution argument");
  const double s = (y / r_c_).as_dimensionless();
  return Qty(reduced_self_convolution_numeric(s, spec), dim::none) / pow_int(r_c_, 3);
}

Qty CorrelationKernel::curvature_at_origin() const {
  return Qty(reduced_curvature(), dim::none) / pow_int(r_c_, 5);
}

Qty CorrelationKernel::curvature_numeric(const QuadratureSpec& spec) const {
  const double cap = truncation_radius();
  const double c = integrate_or_throw(
                       [this](double s) {
                         const double d = shape_gradient(s);
                         return s * s * d * d;
                       },
                       0.0, cap, spec, "curvature gradient integral") *
                   4.0 * kPi;
  return Qty(c, dim::none) / pow_int(r_c_, 5);
}

ConvolutionResult tabulate_self_convolution(const CorrelationKernel& k,
                                            const std::vector<double>& s_values,
                                            const QuadratureSpec& spec) {
  ConvolutionResult out{k.self_convolution_numeric(k.r_c() * 0.0, spec),
                        k.curvature_at_origin(), {}};
  out.samples.reserve(s_values.size());
  for (const double s : s_values) {
    out.samples.emplace_back(s, k.self_convolution_numeric(k.r_c() * s, spec));
  }
  return out;
}

}  // namespace csl
