#pragma once

#include <string>
#include <vector>

#include "eulerchi/numeric.hpp"

namespace eulerchi {

// Integer polynomial, coefficients stored constant term first.
// The empty coefficient vector is the zero polynomial.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial one();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const;
  BigInt coeff(int k) const;  // 0 outside the stored range
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;
  IntPolynomial pow(int k) const;

  // x^deg * f(1/x) normalized monic: the characteristic polynomial of the
  // inverse matrix. Requires constant term +-1.
  IntPolynomial reciprocal() const;

  std::string str() const;  // e.g. "x^3 - x^2 - x + 1"

  friend IntPolynomial operator*(const IntPolynomial& f,
                                 const IntPolynomial& g);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Phi_n for n in {1,2,3,4,6} -- the only cyclotomic factors the
// characteristic polynomial of a finite-order integer matrix with
// nonvanishing centralizer chi can carry. Rejects any other n.
IntPolynomial cyclotomic_polynomial(int n);

}  // namespace eulerchi
