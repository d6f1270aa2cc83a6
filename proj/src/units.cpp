#include "csl/units.hpp"

#include <sstream>

namespace csl {

namespace {
void append_power(std::ostringstream& os, const char* sym, int p) {
  if (p == 0) return;
  if (os.tellp() > 0) os << ' ';
  os << sym;
  if (p != 1) os << '^' << p;
}
}  // namespace

std::string Dim::str() const {
  std::ostringstream os;
  append_power(os, "cm", length);
  append_power(os, "g", mass);
  append_power(os, "s", time);
  append_power(os, "K", temperature);
  std::string out = os.str();
  return out.empty() ? "1" : out;
}

void Qty::check_finite() const {
  if (!std::isfinite(value_)) {
    throw std::domain_error("non-finite quantity of dimension " + dim_.str());
  }
}

double Qty::in(const Qty& unit) const {
  if (dim_ != unit.dim_) {
    throw DimensionError("cannot express " + dim_.str() + " in units of " +
                         unit.dim_.str());
  }
  return value_ / unit.value_;
}

double Qty::as_dimensionless() const {
  if (!dim_.is_dimensionless()) {
    throw DimensionError("expected dimensionless value, got " + dim_.str());
  }
  return value_;
}

Qty& Qty::operator+=(const Qty& o) {
  if (dim_ != o.dim_) {
    throw DimensionError("cannot add " + dim_.str() + " to " + o.dim_.str());
  }
  value_ += o.value_;
  check_finite();
  return *this;
}

Qty& Qty::operator-=(const Qty& o) {
  if (dim_ != o.dim_) {
    throw DimensionError("cannot subtract " + o.dim_.str() + " from " + dim_.str());
  }
  value_ -= o.value_;
  check_finite();
  return *this;
}

Qty pow_int(const Qty& q, int n) {
  return Qty(std::pow(q.value(), n), q.dim() * n);
}

Qty sqrt_qty(const Qty& q) {
  const Dim& d = q.dim();
  if (d.length % 2 || d.mass % 2 || d.time % 2 || d.temperature % 2) {
    throw DimensionError("square root of odd-exponent dimension " + d.str());
  }
  if (q.value() < 0.0) {
    throw std::domain_error("square root of negative quantity");
  }
  return Qty(std::sqrt(q.value()),
             {d.length / 2, d.mass / 2, d.time / 2, d.temperature / 2});
}

bool assert_dim(const Qty& q, const Dim& expected) { return q.dim() == expected; }

void require_dim(const Qty& q, const Dim& expected, const char* what) {
  if (q.dim() != expected) {
    throw DimensionError(std::string(what) + ": expected " + expected.str() +
                         ", got " + q.dim().str());
  }
}

double ratio(const Qty& a, const Qty& b) { return a.in(b); }

namespace un {
Qty eV() { return constants().eV; }
Qty keV() { return 1e3 * constants().eV; }
Qty MeV() { return 1e6 * constants().eV; }
Qty year() { return 3.15576e7 * s; }   // Julian year
Qty day() { return 86400.0 * s; }
Qty Mpc() { return 3.0856775814913673e24 * cm; }
Qty km_per_s() { return 1e5 * cm_per_s; }
}  // namespace un

const Constants& constants() {
  static const Constants k = [] {
    Constants c;
    c.hbar = 1.054571817e-27 * un::erg * un::s;
    c.c = 2.99792458e10 * un::cm_per_s;
    c.k_B = 1.380649e-16 * un::erg / un::K;
    c.m_N = 1.67262192369e-24 * un::g;
    c.m_e = 9.1093837015e-28 * un::g;
    c.amu = 1.66053906660e-24 * un::g;
    c.eV = 1.602176634e-12 * un::erg;
    c.hbar_c = c.hbar * c.c;
    // Engine-wide electromagnetic convention: e^2 = 4*pi*alpha_fs in units
    // with hbar = c = 1, with this exact alpha value. Keeping alpha pinned
    // (rather than CODATA 137.035999) makes the radiation-channel numbers
    // reproducible against their published evaluations.
    c.alpha_fs = 1.0 / 137.04;
    return c;
  }();
  return k;
}

const std::vector<UnitDef>& unit_catalog() {
  static const std::vector<UnitDef> cat = {
      {"cm", un::cm},
      {"g", un::g},
      {"s", un::s},
      {"K", un::K},
      {"erg", un::erg},
      {"eV", un::eV()},
      {"keV", un::keV()},
      {"MeV", un::MeV()},
      {"erg_per_s", un::erg_per_s},
      {"eV_per_s", un::eV() / un::s},
      {"per_s", un::per_s},
      {"per_cm", un::per_cm},
      {"per_cm3", un::per_cm3},
      {"g_per_cm3", un::g_per_cm3},
      {"cm_per_s", un::cm_per_s},
      {"km_per_s", un::km_per_s()},
      {"year", un::year()},
      {"day", un::day()},
      {"Mpc", un::Mpc()},
  };
  return cat;
}

}  // namespace csl
