#pragma once

#include <vector>

#include "eulerchi/polynomial.hpp"

namespace eulerchi {

// Resultant prod_{i,j}(alpha_i - beta_j) with f's roots as the alphas
// (equivalently prod_i g(alpha_i) for monic f, g), computed as the Sylvester
// matrix determinant by fraction-free elimination. f and g must be monic and
// nonconstant.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

// The same product evaluated directly in Q(zeta_12) from root exponents
// mod 12. Raises InternalError if the product fails to be rational (cannot
// happen for Galois-stable input; guards implementation bugs).
Rational resultant_oracle(const std::vector<int>& rootExponentsF,
                          const std::vector<int>& rootExponentsG);

}  // namespace eulerchi
