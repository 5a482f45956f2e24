#pragma once

#include <cmath>

#include "deltainfer/errors.hpp"

namespace deltainfer {

/// Forward-mode dual number: value + derivative coefficient of the
/// infinitesimal part. Arithmetic follows (a+b eps)(c+d eps) = ac + (ad+bc) eps.
/// Comparisons and branches read only the value part.
struct Dual {
  double value = 0.0;
  double deriv = 0.0;

  Dual() = default;
  Dual(double v) : value(v), deriv(0.0) {}  // lift a constant
  Dual(double v, double d) : value(v), deriv(d) {}

  /// The active variable at `v`: derivative seeded with 1.
  static Dual variable(double v) { return Dual(v, 1.0); }

  Dual operator-() const { return Dual(-value, -deriv); }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    deriv = deriv * o.value + value * o.deriv;
    value *= o.value;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    deriv = (deriv * o.value - value * o.deriv) / (o.value * o.value);
    value /= o.value;
    return *this;
  }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }

inline bool operator==(const Dual& a, const Dual& b) { return a.value == b.value; }
inline bool operator!=(const Dual& a, const Dual& b) { return a.value != b.value; }
inline bool operator<(const Dual& a, const Dual& b) { return a.value < b.value; }
inline bool operator<=(const Dual& a, const Dual& b) { return a.value <= b.value; }
inline bool operator>(const Dual& a, const Dual& b) { return a.value > b.value; }
inline bool operator>=(const Dual& a, const Dual& b) { return a.value >= b.value; }

inline Dual exp(const Dual& x) {
  const double e = std::exp(x.value);
  return Dual(e, e * x.deriv);
}

inline Dual log(const Dual& x) {
  if (!(x.value > 0.0)) throw DomainError("log of non-positive value");
  return Dual(std::log(x.value), x.deriv / x.value);
}

inline Dual sqrt(const Dual& x) {
  if (x.value < 0.0) throw DomainError("sqrt of negative value");
  const double r = std::sqrt(x.value);
  if (r == 0.0) throw DomainError("sqrt derivative undefined at 0");
  return Dual(r, 0.5 * x.deriv / r);
}

/// x^e for a real (constant) exponent.
inline Dual pow(const Dual& x, double e) {
  if (x.value < 0.0) throw DomainError("pow of negative base");
  if (x.value == 0.0 && e < 1.0) throw DomainError("pow derivative undefined at 0");
  return Dual(std::pow(x.value, e), e * std::pow(x.value, e - 1.0) * x.deriv);
}

}  // namespace deltainfer
