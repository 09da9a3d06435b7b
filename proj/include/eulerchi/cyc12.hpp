#pragma once

#include <array>

#include "eulerchi/numeric.hpp"

namespace eulerchi {

// Element of Q(zeta_12) over the power basis {1, z, z^2, z^3}, where z is a
// primitive 12th root of unity with z^4 = z^2 - 1 (minimal polynomial
// x^4 - x^2 + 1). Every 12th root of unity is some z^k, so all admissible
// torsion eigenvalues live here. Used only by the verification oracles.
class Cyc12 {
 public:
  Cyc12() = default;  // zero
  explicit Cyc12(Rational r);
  Cyc12(Rational c0, Rational c1, Rational c2, Rational c3);

  static Cyc12 root(int k);  // z^k for any integer k

  const Rational& coord(int i) const { return c_[static_cast<size_t>(i)]; }
  bool is_rational() const;
  // Rational coordinate; raises InternalError when the element is not
  // rational. The oracle entry points lean on this as a self check.
  Rational rational_value() const;

  Cyc12& operator+=(const Cyc12& o);
  Cyc12& operator-=(const Cyc12& o);
  Cyc12& operator*=(const Cyc12& o);
  friend Cyc12 operator+(Cyc12 a, const Cyc12& b) { return a += b; }
  friend Cyc12 operator-(Cyc12 a, const Cyc12& b) { return a -= b; }
  friend Cyc12 operator*(Cyc12 a, const Cyc12& b) { return a *= b; }
  Cyc12 operator-() const;

  friend bool operator==(const Cyc12&, const Cyc12&) = default;

 private:
  std::array<Rational, 4> c_{};
};

}  // namespace eulerchi
