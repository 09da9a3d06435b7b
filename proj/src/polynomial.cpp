#include "eulerchi/polynomial.hpp"

#include <sstream>

namespace eulerchi {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(f.coeffs_.size() + g.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < f.coeffs_.size(); ++i)
    for (size_t j = 0; j < g.coeffs_.size(); ++j)
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int k) const {
  require(k >= 0, "IntPolynomial::pow: negative exponent");
  IntPolynomial acc = one();
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

IntPolynomial IntPolynomial::reciprocal() const {
  require(!is_zero(), "reciprocal of the zero polynomial");
  const BigInt& c0 = coeffs_.front();
  require(c0 == 1 || c0 == -1, "reciprocal: constant term must be a unit");
  std::vector<BigInt> rev(coeffs_.rbegin(), coeffs_.rend());
  if (c0 == -1)
    for (auto& c : rev) c = -c;
  return IntPolynomial(std::move(rev));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) out << a.str();
    if (k > 0) {
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPolynomial cyclotomic_polynomial(int n) {
  // No other cyclotomic factor can occur in an admissible torsion class.
  switch (n) {
    case 1:
      return IntPolynomial({BigInt(-1), BigInt(1)});  // x - 1
    case 2:
      return IntPolynomial({BigInt(1), BigInt(1)});  // x + 1
    case 3:
      return IntPolynomial({BigInt(1), BigInt(1), BigInt(1)});  // x^2 + x + 1
    case 4:
      return IntPolynomial({BigInt(1), BigInt(0), BigInt(1)});  // x^2 + 1
    case 6:
      return IntPolynomial({BigInt(1), BigInt(-1), BigInt(1)});  // x^2 - x + 1
    default:
      throw std::invalid_argument(
          "cyclotomic_polynomial: n must be one of 1, 2, 3, 4, 6");
  }
}

}  // namespace eulerchi
