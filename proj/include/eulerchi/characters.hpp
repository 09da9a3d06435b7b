#pragma once

#include <vector>

#include "eulerchi/torsion.hpp"

namespace eulerchi {

// Highest weight in epsilon coordinates: weakly decreasing integers,
// negative entries allowed. S^n = (n,0,...,0); V (x) det = lambda + (1,...,1).
using Weight = std::vector<int>;

bool is_dominant(const Weight& lambda);
Weight det_twist(const Weight& lambda, int k);

// h_0..h_n: complete homogeneous symmetric functions of the roots of a monic
// characteristic polynomial, via the linear recurrence its coefficients
// define. Always integers.
std::vector<BigInt> h_sequence(const IntPolynomial& charPoly, int n);
std::vector<BigInt> h_sequence(const TorsionClass& cls, int n);

// Schur value s_mu(roots of charPoly) by the Jacobi-Trudi determinant
// det(h_{mu_i - i + j}); mu must be a partition (weakly decreasing, >= 0,
// length = degree of charPoly, trailing zeros allowed).
BigInt schur_from_char_poly(const IntPolynomial& charPoly,
                            const std::vector<int>& mu);

// Character of V_lambda at the class. Factors lambda = mu + k(1,...,1) with
// k = lambda_m, evaluates the Jacobi-Trudi determinant on mu, multiplies by
// det(A)^k. Rejects rank mismatch and non-dominant lambda.
BigInt trace_highest_weight(const TorsionClass& cls, const Weight& lambda);

// Independent Schur-character evaluation: sum over semistandard Young
// tableaux of shape mu of the eigenvalue monomials, accumulated in
// Q(zeta_12); asserts the result is a rational integer. Guarded to
// degree(cls) <= 4 and |mu| <= 12.
BigInt trace_oracle(const TorsionClass& cls, const Weight& lambda);

// dim V_lambda for GL_m: the same h-machinery run on char poly (x-1)^m.
BigInt dim_rep(int m, const Weight& lambda);

}  // namespace eulerchi
