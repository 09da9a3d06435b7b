#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerchi/characters.hpp"

namespace eulerchi {

enum class Group { GL, SL, Gamma1, Gamma1SL };
std::string group_name(Group g);

// One summand of the class-sum formula.
struct ClassContribution {
  std::string label;
  BigInt r;                            // R(A)
  Rational chiC;                       // chi(C(A))
  BigInt trace;                        // Tr(A|V)
  Rational contribution;               // r * chiC * trace, exactly
  std::optional<BigInt> weightFactor;  // p-1 or p^2-1 for the Gamma1 groups
};

struct ChiResult {
  Group group = Group::GL;
  int m = 0;
  std::optional<long long> p;
  Weight weight;
  Rational chi;
  std::optional<Rational> sigma1, sigma2;
  std::vector<ClassContribution> breakdown;
};

// chi_h(GL_m(Z), V_lambda) = sum_A R(A) chi(C(A)) Tr(A|V_lambda) over the
// admissible torsion classes. Exactly 0 with empty breakdown for m > 10.
ChiResult chi_gl(int m, const Weight& lambda);

// chi_h(SL_m(Z), V) = chi_h(GL_m, V) + chi_h(GL_m, V (x) det).
Rational chi_sl(int m, const Weight& lambda);

// Partial class sum restricted to unit multiplicity k (k = 1 or 2).
Rational sigma(int m, const Weight& lambda, int k);

// chi_h(Gamma_1(m,p), V) = (p-1) Sigma^(1) + (p^2-1) Sigma^(2).
// Requires p prime, p >= 5, m >= 2.
ChiResult chi_gamma1(int m, long long p, const Weight& lambda);

Rational chi_gamma1_sl(int m, long long p, const Weight& lambda);

// Full-result variants for the SL-type groups; the per-class trace column
// is Tr(A|V) + Tr(A|V (x) det), so contributions still sum to chi.
ChiResult chi_sl_result(int m, const Weight& lambda);
ChiResult chi_gamma1_sl_result(int m, long long p, const Weight& lambda);

// Cross-validates a result's classes against the Q(zeta_12) oracles:
// resultants for every class, traces where the oracle guard allows.
// Raises InternalError on any mismatch.
void self_check(const ChiResult& result);

}  // namespace eulerchi
