#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "eulerchi/polynomial.hpp"

namespace eulerchi {

// Finite-order conjugacy class of GL_m(Z) with nonvanishing centralizer chi,
// encoded by the multiplicities (a,b,c,d,e) of Phi_1, Phi_2, Phi_3, Phi_4,
// Phi_6 in its characteristic polynomial. Eigenvalues 1 and -1 may occur
// with multiplicity up to two, the complex types at most once; block
// representatives are never materialized. Two -1 blocks and one -I2 block
// are the same class (both give b = 2), likewise a = 2 is the I2 block.
class TorsionClass {
 public:
  TorsionClass(int a, int b, int c, int d, int e);

  int mult(int i) const { return mult_[static_cast<size_t>(i)]; }
  const std::array<int, 5>& mults() const { return mult_; }
  int degree() const;
  int unit_multiplicity() const { return mult_[0]; }
  int det() const { return parity_sign(mult_[1]); }
  std::string label() const;  // bracket notation, e.g. "[1,-1,T3]"

  IntPolynomial char_poly() const;  // product of Phi_n^mult, monic
  BigInt resultant() const;         // R(A): product over pairs of factors
  Rational centralizer_chi() const;
  // Centralizer as a product of arithmetic-group factors with their chi's,
  // e.g. [1,-1,T3] -> {("GL1(Z)",1/2), ("GL1(Z)",1/2), ("C6",1/6)}.
  std::vector<std::pair<std::string, Rational>> centralizer_shape() const;

  // Eigenvalues as 12th-root exponents, multiplicity-expanded, in factor
  // order; e.g. [1,-I2] -> {0, 6, 6}.
  std::vector<int> root_exponents() const;
  // Exponents of factor i alone, multiplicity-expanded.
  std::vector<int> factor_exponents(int i) const;

  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;

 private:
  std::array<int, 5> mult_;
};

// All classes of degree exactly m, lexicographic on (a,b,c,d,e).
// Empty for every m > 10.
std::vector<TorsionClass> enumerate_classes(int m);

// R(A) recomputed through the Q(zeta_12) oracle: product over pairs of
// distinct present factors of resultant_oracle on their multiplicity-expanded
// exponent multisets.
Rational class_resultant_oracle(const TorsionClass& cls);

}  // namespace eulerchi
