#pragma once

#include <string>
#include <vector>

#include "eulerchi/eulerchar.hpp"

namespace eulerchi {

// Stated closed forms from the source tables, each implemented verbatim,
// plus the audit that recomputes every one of them through the engine.

struct CohomologyProfile {
  std::string group;
  std::string coefficient;
  std::vector<BigInt> dims;       // dim H^0, dim H^1, ...
  bool engineConsistent = false;  // alternating sum equals the engine chi
};

Rational alternating_sum(const std::vector<BigInt>& dims);

// dim S_k(Gamma_1(p)): 1 + (p^2-1)/24 - (p-1)/2 for k = 2,
// (k-1)(p^2-1)/24 - (p-1)/2 for k >= 3. Signals if the result fails to be a
// nonnegative integer.
BigInt dim_cusp_gamma1p(int k, long long p);

struct DimPair {
  BigInt h0, h1;
};

// Boundary / Eisenstein dimensions of Gamma_1(2,p) with S^n (x) det^twist.
DimPair gamma1_2p_boundary(int n, bool twisted, long long p);
DimPair gamma1_2p_eisenstein(int n, bool twisted, long long p);

// Cuspidal H^1 dimension; equals dim_cusp_gamma1p(n+2, p) for both twists.
BigInt gamma1_2p_cusp(int n, bool twisted, long long p);

// dim S_k of the full modular group, recovered from the engine:
// max(0, -chi_gl(2,(k-2,0))) for even k >= 4, else 0.
BigInt dim_cusp_full_level(int k);

// Stated chi_h(SL_3(Z), V) in the four parity cases of (lambda_1, lambda_2):
// [2a,2b], [2a+1,2b+1], [2a,2b+1], [2a+1,2b].
enum class Sl3Case { EvenEven, OddOdd, EvenOdd, OddEven };
Rational sl3_closed_chi(int a, int b, Sl3Case parityCase);

// Stated chi_h(Gamma_1(3,p), V_lambda), lambda_3 in {0,1}, eight parity
// cases. Rejects weights outside the case list.
Rational gamma1_3p_closed_chi(const Weight& lambda, long long p);

// Stated trace table for the class [-1,I2], cases (a)-(h) indexed 0-7, and
// the weight each case denotes.
BigInt trace_neg1_I2_paper(int caseIndex, int a, int b);
Weight trace_case_weight(int caseIndex, int a, int b);

// Stated cohomology profiles (engineConsistent is filled by comparison with
// the engine chi).
CohomologyProfile gamma1_3p_cohomology(bool detCoeff, long long p);
// Stated profile of Gamma_1(3,p) /\ SL_3(Z) as printed ...
CohomologyProfile gamma1_3p_sl_cohomology_stated(long long p);
// ... and the profile obtained by substituting the cusp dimensions into the
// Lee-Schwermer description directly.
CohomologyProfile lee_schwermer_profile(long long p);
CohomologyProfile gl4_cohomology(bool detCoeff);

Rational gamma1_4p_chi(bool detCoeff, long long p);
// Primary stated value: trivial -> -(p^2-1)/3, det -> +(p^2-1)/3.
Rational gamma1_5p_chi(bool detCoeff, long long p);
// The alternative printed sign for det, -(p^2-1)/3 (flagged by the audit).
Rational gamma1_5p_chi_alt_stated(bool detCoeff, long long p);

struct AuditRecord {
  std::string formula;
  std::string inputs;
  std::string stated;      // the closed form as printed
  std::string recomputed;  // the engine's independent value
  bool equal;
};

// Every closed form above recomputed over the grid, in a fixed deterministic
// order. Discrepancies are findings, not errors.
std::vector<AuditRecord> audit(const std::vector<long long>& primes,
                               int weightBound);

}  // namespace eulerchi
