// Dimensioned quantities in CGS-Gaussian units with temperature as a fourth
// base dimension. Electromagnetic couplings enter only through the
// fine-structure constant, so no charge dimension is carried: every quantity
// is reducible to powers of cm, g, s, K.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace csl {

/// Integer exponents of the four base dimensions.
struct Dim {
  int length = 0;
  int mass = 0;
  int time = 0;
  int temperature = 0;

  friend constexpr bool operator==(const Dim& a, const Dim& b) {
    return a.length == b.length && a.mass == b.mass && a.time == b.time &&
           a.temperature == b.temperature;
  }
  friend constexpr bool operator!=(const Dim& a, const Dim& b) { return !(a == b); }

  constexpr bool is_dimensionless() const {
    return length == 0 && mass == 0 && time == 0 && temperature == 0;
  }

  /// Render as e.g. "cm^2 g s^-1" ("1" when dimensionless).
  std::string str() const;
};

constexpr Dim operator+(const Dim& a, const Dim& b) {
  return {a.length + b.length, a.mass + b.mass, a.time + b.time,
          a.temperature + b.temperature};
}
constexpr Dim operator-(const Dim& a, const Dim& b) {
  return {a.length - b.length, a.mass - b.mass, a.time - b.time,
          a.temperature - b.temperature};
}
constexpr Dim operator*(const Dim& a, int k) {
  return {a.length * k, a.mass * k, a.time * k, a.temperature * k};
}

namespace dim {
inline constexpr Dim none{};
inline constexpr Dim length{1, 0, 0, 0};
inline constexpr Dim mass{0, 1, 0, 0};
inline constexpr Dim time{0, 0, 1, 0};
inline constexpr Dim temperature{0, 0, 0, 1};
inline constexpr Dim rate{0, 0, -1, 0};
inline constexpr Dim velocity{1, 0, -1, 0};
inline constexpr Dim energy{2, 1, -2, 0};            // erg
inline constexpr Dim power{2, 1, -3, 0};             // erg/s
inline constexpr Dim number_density{-3, 0, 0, 0};    // cm^-3
inline constexpr Dim mass_density{-3, 1, 0, 0};      // g cm^-3
inline constexpr Dim wavevector{-1, 0, 0, 0};        // cm^-1
}  // namespace dim

/// Thrown on any dimensional inconsistency; the message lists both dimensions.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A value with attached dimension. Values are always stored in base CGS+K
/// units; unit objects below are just dimensioned scale factors. Non-finite
/// values are rejected at construction so overflow or 0/0 fails loudly at
/// the operation that produced it.
class Qty {
 public:
  Qty() : value_(0.0) {}
  Qty(double value, Dim d) : value_(value), dim_(d) { check_finite(); }
  static Qty dimensionless(double value) { return Qty(value, dim::none); }

  double value() const { return value_; }
  const Dim& dim() const { return dim_; }

  /// Numeric value expressed in `unit` (dimension-checked ratio).
  double in(const Qty& unit) const;

  /// Value as a plain number; throws unless dimensionless.
  double as_dimensionless() const;

  Qty& operator+=(const Qty& o);
  Qty& operator-=(const Qty& o);

  friend Qty operator+(Qty a, const Qty& b) { return a += b; }
  friend Qty operator-(Qty a, const Qty& b) { return a -= b; }
  friend Qty operator-(const Qty& a) { return Qty(-a.value_, a.dim_); }
  friend Qty operator*(const Qty& a, const Qty& b) {
    return Qty(a.value_ * b.value_, a.dim_ + b.dim_);
  }
  friend Qty operator/(const Qty& a, const Qty& b) {
    return Qty(a.value_ / b.value_, a.dim_ - b.dim_);
  }
  friend Qty operator*(double s, const Qty& a) { return Qty(s * a.value_, a.dim_); }
  friend Qty operator*(const Qty& a, double s) { return Qty(s * a.value_, a.dim_); }
  friend Qty operator/(const Qty& a, double s) { return Qty(a.value_ / s, a.dim_); }
  friend Qty operator/(double s, const Qty& a) {
    return Qty(s / a.value_, a.dim_ * -1);
  }

 private:
  void check_finite() const;
  double value_;
  Dim dim_;
};

/// q^n for integer n.
Qty pow_int(const Qty& q, int n);

/// Square root; requires all dimension exponents even.
Qty sqrt_qty(const Qty& q);

/// True when q carries exactly `expected`.
bool assert_dim(const Qty& q, const Dim& expected);

/// Throws DimensionError naming `what` unless q carries `expected`.
void require_dim(const Qty& q, const Dim& expected, const char* what);

/// Dimension-checked ratio of two quantities of equal dimension.
double ratio(const Qty& a, const Qty& b);

// Base and derived unit scale factors. Multiply to construct quantities
// (e.g. 3.0 * un::eV), divide or Qty::in() to read them out.
namespace un {
inline const Qty cm{1.0, dim::length};
inline const Qty g{1.0, dim::mass};
inline const Qty s{1.0, dim::time};
inline const Qty K{1.0, dim::temperature};
inline const Qty erg{1.0, dim::energy};
inline const Qty erg_per_s{1.0, dim::power};
inline const Qty per_s{1.0, dim::rate};
inline const Qty cm_per_s{1.0, dim::velocity};
inline const Qty per_cm{1.0, dim::wavevector};
inline const Qty per_cm3{1.0, dim::number_density};
inline const Qty g_per_cm3{1.0, dim::mass_density};
Qty eV();
Qty keV();
Qty MeV();
Qty year();
Qty day();
Qty Mpc();
Qty km_per_s();
}  // namespace un

/// Physical constants (CODATA where not pinned by engine convention).
struct Constants {
  Qty hbar;       ///< erg s
  Qty c;          ///< cm/s
  Qty k_B;        ///< erg/K
  Qty m_N;        ///< nucleon (proton) mass, g
  Qty m_e;        ///< electron mass, g
  Qty amu;        ///< atomic mass unit, g
  Qty eV;         ///< erg
  Qty hbar_c;     ///< erg cm; always equals hbar*c (tested to 1e-12)
  double alpha_fs;  ///< fine-structure constant, pinned to 1/137.04 by engine
                    ///< convention so charge-squared is exactly 4*pi*alpha_fs
};
const Constants& constants();

/// Named unit for catalog-driven conversion round-trips.
struct UnitDef {
  std::string name;
  Qty scale;
};
const std::vector<UnitDef>& unit_catalog();

/// Quantity from a value expressed in `unit`.
inline Qty qty_in(double value, const Qty& unit) { return value * unit; }

}  // namespace csl
