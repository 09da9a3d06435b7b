#include "eulerchi/resultant.hpp"

#include "eulerchi/cyc12.hpp"

namespace eulerchi {

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  require(f.degree() >= 1 && g.degree() >= 1,
          "resultant: both polynomials must be nonconstant");
  require(f.is_monic() && g.is_monic(),
          "resultant: both polynomials must be monic");
  const int m = f.degree();
  const int n = g.degree();
  const size_t size = static_cast<size_t>(m + n);

  // Sylvester matrix: n shifted rows of f above m shifted rows of g, each
  // row holding the coefficients from the leading one downwards.
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, BigInt(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = f.coeff(m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = g.coeff(n - k);

  return det_bareiss(std::move(s));
}

Rational resultant_oracle(const std::vector<int>& rootExponentsF,
                          const std::vector<int>& rootExponentsG) {
  require(!rootExponentsF.empty() && !rootExponentsG.empty(),
          "resultant_oracle: exponent multisets must be nonempty");
  Cyc12 product{Rational(1)};
  for (int a : rootExponentsF)
    for (int b : rootExponentsG) product *= Cyc12::root(a) - Cyc12::root(b);
  return product.rational_value();
}

}  // namespace eulerchi
