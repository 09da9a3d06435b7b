#include "eulerchi/formulas.hpp"

#include <sstream>

namespace eulerchi {

namespace {

void check_p(long long p) {
  require(p >= 5, "p must be a prime >= 5");
  require(is_prime(p), "p must be prime");
}

BigInt phi(long long p) { return BigInt(p) - 1; }
BigInt phi2(long long p) { return BigInt(p) * p - 1; }

BigInt to_integer(const Rational& v, const char* what) {
  ensure(denominator(v) == 1, std::string(what) + ": value not integral");
  return numerator(v);
}

std::string weight_str(const Weight& w) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << ")";
  return out.str();
}

std::string dims_str(const std::vector<BigInt>& dims) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out << ",";
    out << dims[i].str();
  }
  out << ")";
  return out.str();
}

}  // namespace

Rational alternating_sum(const std::vector<BigInt>& dims) {
  Rational s = 0;
  int sign = 1;
  for (const auto& d : dims) {
    s += sign * Rational(d);
    sign = -sign;
  }
  return s;
}

BigInt dim_cusp_gamma1p(int k, long long p) {
  require(k >= 2, "dim_cusp_gamma1p: weight must be at least 2");
  check_p(p);
  Rational v;
  if (k == 2) {
    v = Rational(1) + Rational(phi2(p), 24) - Rational(phi(p), 2);
  } else {
    v = Rational((k - 1) * phi2(p), 24) - Rational(phi(p), 2);
  }
  const BigInt d = to_integer(v, "dim_cusp_gamma1p");
  ensure(d >= 0, "dim_cusp_gamma1p: negative dimension");
  return d;
}

DimPair gamma1_2p_boundary(int n, bool twisted, long long p) {
  require(n >= 0, "n must be nonnegative");
  check_p(p);
  const BigInt f = phi(p);
  if (n % 2 == 1) return {f / 2, f / 2};
  if (!twisted) return {f, BigInt(0)};
  return {BigInt(0), f};
}

DimPair gamma1_2p_eisenstein(int n, bool twisted, long long p) {
  require(n >= 0, "n must be nonnegative");
  check_p(p);
  const BigInt f = phi(p);
  if (n % 2 == 1) return {BigInt(0), f / 2};
  if (n == 0) {
    if (!twisted) return {BigInt(1), BigInt(0)};
    return {BigInt(0), f - 1};
  }
  if (!twisted) return {BigInt(0), BigInt(0)};
  return {BigInt(0), f};
}

BigInt gamma1_2p_cusp(int n, bool twisted, long long p) {
  require(n >= 0, "n must be nonnegative");
  (void)twisted;  // the two twists share one cuspidal dimension
  return dim_cusp_gamma1p(n + 2, p);
}

BigInt dim_cusp_full_level(int k) {
  require(k >= 0, "dim_cusp_full_level: weight must be nonnegative");
  if (k < 4 || k % 2 == 1) return 0;
  const Rational v = -chi_gl(2, Weight{k - 2, 0}).chi;
  if (v < 0) return 0;
  return to_integer(v, "dim_cusp_full_level");
}

Rational sl3_closed_chi(int a, int b, Sl3Case parityCase) {
  require(a >= 0 && b >= 0, "sl3_closed_chi: indices must be nonnegative");
  auto S = [](int k) { return Rational(dim_cusp_full_level(k)); };
  switch (parityCase) {
    case Sl3Case::EvenEven:
      require(a >= b, "sl3_closed_chi: weight must be dominant");
      return -(Rational(1) + S(2 * a - 2 * b + 2) + S(2 * b + 2));
    case Sl3Case::OddOdd:
      require(a >= b, "sl3_closed_chi: weight must be dominant");
      return S(2 * a + 4) - S(2 * b + 2);
    case Sl3Case::EvenOdd:
      require(2 * a >= 2 * b + 1, "sl3_closed_chi: weight must be dominant");
      return Rational(0);
    case Sl3Case::OddEven:
      require(2 * a + 1 >= 2 * b, "sl3_closed_chi: weight must be dominant");
      return S(2 * a + 4) - S(2 * b + 2);
  }
  throw std::invalid_argument("sl3_closed_chi: unknown case");
}

Rational gamma1_3p_closed_chi(const Weight& lambda, long long p) {
  check_p(p);
  require(lambda.size() == 3 && is_dominant(lambda),
          "gamma1_3p_closed_chi: weight must be dominant of length 3");
  const int z = lambda[2];
  require(z == 0 || z == 1,
          "gamma1_3p_closed_chi: weight outside the eight stated cases");
  const int x = lambda[0], y = lambda[1];
  const bool xe = x % 2 == 0, ye = y % 2 == 0;
  const Rational w1 = Rational(phi(p), 2);
  const Rational w2 = Rational(phi2(p), 12);
  auto S = [](int k) { return Rational(dim_cusp_full_level(k)); };

  if (z == 0) {
    if (xe && ye) {  // (2a, 2b, 0)
      const int a = x / 2, b = y / 2;
      return -w1 * (Rational(1) + S(2 * a - 2 * b + 2) + S(2 * b + 2)) -
             w2 * (a + 1);
    }
    if (!xe && ye) {  // (2a+1, 2b, 0)
      const int a = (x - 1) / 2, b = y / 2;
      return w1 * (S(2 * a + 4) - S(2 * b + 2)) - w2 * (a - b + 1);
    }
    if (!xe && !ye) {  // (2a+1, 2b+1, 0)
      const int a = (x - 1) / 2, b = (y - 1) / 2;
      return w1 * (S(2 * a + 4) - S(2 * a - 2 * b + 2)) + w2 * (b + 1);
    }
    return Rational(0);  // (2a, 2b+1, 0)
  }
  if (!xe && !ye) {  // (2a+1, 2b+1, 1)
    const int a = (x - 1) / 2, b = (y - 1) / 2;
    return -w1 * (Rational(1) + S(2 * a - 2 * b + 2) + S(2 * b + 2)) +
           w2 * (a + 1);
  }
  if (xe && !ye) {  // (2a+2, 2b+1, 1)
    const int a = (x - 2) / 2, b = (y - 1) / 2;
    return w1 * (S(2 * a + 4) - S(2 * b + 2)) + w2 * (a - b + 1);
  }
  if (xe && ye) {  // (2a+2, 2b+2, 1)
    const int a = (x - 2) / 2, b = (y - 2) / 2;
    return w1 * (S(2 * a + 4) - S(2 * a - 2 * b + 2)) - w2 * (b + 1);
  }
  return Rational(0);  // (2a+1, 2b+2, 1)
}

BigInt trace_neg1_I2_paper(int caseIndex, int a, int b) {
  require(caseIndex >= 0 && caseIndex < 8, "trace case must be 0..7");
  require(a >= 0 && b >= 0, "trace case indices must be nonnegative");
  switch (caseIndex) {
    case 0:
      return a + 1;  // H_{2a,2b}
    case 1:
      return -(a + 1);  // H_{2a+1,2b+1,1}
    case 2:
      return -a + b - 1;  // H_{2a+1,2b}
    case 3:
      return a - b + 1;  // H_{2a+2,2b+1,1}
    case 4:
      return -(b + 1);  // H_{2a+1,2b+1}
    case 5:
      return b + 1;  // H_{2a+2,2b+2,1}
    case 6:
      return 0;  // H_{2a,2b+1}
    default:
      return 0;  // H_{2a+1,2b+2,1}
  }
}

Weight trace_case_weight(int caseIndex, int a, int b) {
  require(caseIndex >= 0 && caseIndex < 8, "trace case must be 0..7");
  switch (caseIndex) {
    case 0:
      return {2 * a, 2 * b, 0};
    case 1:
      return {2 * a + 1, 2 * b + 1, 1};
    case 2:
      return {2 * a + 1, 2 * b, 0};
    case 3:
      return {2 * a + 2, 2 * b + 1, 1};
    case 4:
      return {2 * a + 1, 2 * b + 1, 0};
    case 5:
      return {2 * a + 2, 2 * b + 2, 1};
    case 6:
      return {2 * a, 2 * b + 1, 0};
    default:
      return {2 * a + 1, 2 * b + 2, 1};
  }
}

CohomologyProfile gamma1_3p_cohomology(bool detCoeff, long long p) {
  check_p(p);
  const BigInt q = phi2(p) / 12;
  const BigInt h = phi(p) / 2;
  CohomologyProfile prof;
  prof.group = "Gamma1(3,p)";
  prof.coefficient = detCoeff ? "det" : "trivial";
  if (!detCoeff) {
    prof.dims = {BigInt(1), BigInt(0), BigInt(0), q + h + 1};
  } else {
    prof.dims = {BigInt(0), BigInt(0), q - h, BigInt(0)};
  }
  const Weight w = detCoeff ? Weight{1, 1, 1} : Weight{0, 0, 0};
  prof.engineConsistent = alternating_sum(prof.dims) == chi_gamma1(3, p, w).chi;
  return prof;
}

CohomologyProfile gamma1_3p_sl_cohomology_stated(long long p) {
  check_p(p);
  const BigInt q = phi2(p) / 12;
  const BigInt h = phi(p) / 2;
  CohomologyProfile prof;
  prof.group = "Gamma1(3,p) /\\ SL3(Z)";
  prof.coefficient = "trivial";
  prof.dims = {BigInt(1), BigInt(0), q - h, q + h + 1};
  prof.engineConsistent =
      alternating_sum(prof.dims) == chi_gamma1_sl(3, p, Weight{0, 0, 0});
  return prof;
}

CohomologyProfile lee_schwermer_profile(long long p) {
  check_p(p);
  CohomologyProfile prof;
  prof.group = "Gamma1(3,p) /\\ SL3(Z)";
  prof.coefficient = "trivial";
  const BigInt s2 = dim_cusp_gamma1p(2, p);
  const BigInt s3 = dim_cusp_gamma1p(3, p);
  prof.dims = {BigInt(1), BigInt(0), s3 + phi(p), 2 * s2 + phi(p) / 2 - 1};
  prof.engineConsistent =
      alternating_sum(prof.dims) == chi_gamma1_sl(3, p, Weight{0, 0, 0});
  return prof;
}

CohomologyProfile gl4_cohomology(bool detCoeff) {
  CohomologyProfile prof;
  prof.group = "GL4(Z)";
  prof.coefficient = detCoeff ? "det" : "trivial";
  if (!detCoeff) {
    prof.dims = {BigInt(1), BigInt(0), BigInt(0), BigInt(0)};
  } else {
    prof.dims = {BigInt(0), BigInt(0), BigInt(0), BigInt(1)};
  }
  const Weight w = detCoeff ? Weight{1, 1, 1, 1} : Weight{0, 0, 0, 0};
  prof.engineConsistent = alternating_sum(prof.dims) == chi_gl(4, w).chi;
  return prof;
}

Rational gamma1_4p_chi(bool detCoeff, long long p) {
  check_p(p);
  const Rational main = -Rational(phi2(p), 12);
  return detCoeff ? main - Rational(phi(p)) : main + Rational(phi(p));
}

Rational gamma1_5p_chi(bool detCoeff, long long p) {
  check_p(p);
  const Rational third = Rational(phi2(p), 3);
  return detCoeff ? third : -third;
}

Rational gamma1_5p_chi_alt_stated(bool detCoeff, long long p) {
  check_p(p);
  (void)detCoeff;  // the alternative statement prints one sign for both
  return -Rational(phi2(p), 3);
}

namespace {

struct AuditBuilder {
  std::vector<AuditRecord> records;

  void add(std::string formula, std::string inputs, const Rational& stated,
           const Rational& recomputed) {
    records.push_back({std::move(formula), std::move(inputs),
                       rational_str(stated), rational_str(recomputed),
                       stated == recomputed});
  }
};

// Full H^1 bookkeeping for Gamma_1(2,p): cusp dimension recovered from the
// engine chi and the Eisenstein H^1.
BigInt cusp_dim_from_engine(int n, bool twisted, long long p) {
  const Weight w = twisted ? Weight{n + 1, 1} : Weight{n, 0};
  const Rational chi = chi_gamma1(2, p, w).chi;
  const BigInt h0Full = (n == 0 && !twisted) ? 1 : 0;
  const BigInt e1 = gamma1_2p_eisenstein(n, twisted, p).h1;
  return to_integer(Rational(h0Full) - chi - Rational(e1),
                    "cusp_dim_from_engine");
}

// The stated Gamma_1(2,p) chi closed forms: +-1/4 (1+(-1)^n) phi(p) minus
// (n+1)/24 phi_2(p).
Rational gamma1_2p_chi_stated(int n, bool twisted, long long p) {
  const Rational traceTerm =
      Rational((n % 2 == 0) ? 2 : 0, 4) * Rational(phi(p));
  const Rational dimTerm = Rational((n + 1) * phi2(p), 24);
  return (twisted ? -traceTerm : traceTerm) - dimTerm;
}

const char kCaseLetters[8] = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};

}  // namespace

std::vector<AuditRecord> audit(const std::vector<long long>& primes,
                               int weightBound) {
  require(weightBound >= 0 && weightBound <= 12,
          "audit: weight bound must be within 0..12");
  for (long long p : primes) check_p(p);

  AuditBuilder b;

  for (long long p : primes)
    for (int n = 0; n <= weightBound; ++n)
      for (int tw = 0; tw <= 1; ++tw) {
        const bool twisted = tw == 1;
        const Weight w = twisted ? Weight{n + 1, 1} : Weight{n, 0};
        std::ostringstream in;
        in << "p=" << p << ",n=" << n << ",twist=" << (twisted ? "det" : "plain");
        b.add("gamma1-2p-chi", in.str(), gamma1_2p_chi_stated(n, twisted, p),
              chi_gamma1(2, p, w).chi);
      }

  for (long long p : primes)
    for (int n = 0; n <= weightBound; ++n)
      for (int tw = 0; tw <= 1; ++tw) {
        const bool twisted = tw == 1;
        std::ostringstream in;
        in << "p=" << p << ",n=" << n << ",twist=" << (twisted ? "det" : "plain");
        b.add("gamma1-2p-cusp", in.str(),
              Rational(gamma1_2p_cusp(n, twisted, p)),
              Rational(cusp_dim_from_engine(n, twisted, p)));
      }

  for (long long p : primes)
    for (int n = 0; n <= weightBound; ++n) {
      BigInt boundarySum = 0, eisSum = 0;
      for (int tw = 0; tw <= 1; ++tw) {
        const auto bd = gamma1_2p_boundary(n, tw == 1, p);
        const auto ei = gamma1_2p_eisenstein(n, tw == 1, p);
        boundarySum += bd.h0 + bd.h1;
        eisSum += ei.h0 + ei.h1;
      }
      std::ostringstream in;
      in << "p=" << p << ",n=" << n;
      b.add("gamma1-2p-boundary-pairing", in.str(), Rational(boundarySum),
            Rational(2 * eisSum));
    }

  for (long long p : primes)
    for (int k = 2; k <= weightBound + 2; ++k) {
      std::ostringstream in;
      in << "p=" << p << ",k=" << k;
      b.add("cusp-dim-gamma1p", in.str(), Rational(dim_cusp_gamma1p(k, p)),
            Rational(cusp_dim_from_engine(k - 2, false, p)));
    }

  {
    struct CaseSpec {
      Sl3Case parityCase;
      const char* name;
    };
    const CaseSpec cases[4] = {{Sl3Case::EvenEven, "[2a,2b]"},
                               {Sl3Case::OddOdd, "[2a+1,2b+1]"},
                               {Sl3Case::EvenOdd, "[2a,2b+1]"},
                               {Sl3Case::OddEven, "[2a+1,2b]"}};
    for (const auto& cs : cases)
      for (int a = 0; a <= weightBound; ++a)
        for (int bb = 0; bb <= weightBound; ++bb) {
          int l1 = 0, l2 = 0;
          switch (cs.parityCase) {
            case Sl3Case::EvenEven:
              l1 = 2 * a;
              l2 = 2 * bb;
              break;
            case Sl3Case::OddOdd:
              l1 = 2 * a + 1;
              l2 = 2 * bb + 1;
              break;
            case Sl3Case::EvenOdd:
              l1 = 2 * a;
              l2 = 2 * bb + 1;
              break;
            case Sl3Case::OddEven:
              l1 = 2 * a + 1;
              l2 = 2 * bb;
              break;
          }
          if (l1 < l2 || l1 > weightBound) continue;
          std::ostringstream in;
          in << "case=" << cs.name << ",a=" << a << ",b=" << bb;
          b.add("sl3-chi", in.str(), sl3_closed_chi(a, bb, cs.parityCase),
                chi_sl(3, Weight{l1, l2, 0}));
        }
  }

  for (long long p : primes)
    for (int ci = 0; ci < 8; ++ci)
      for (int a = 0; a <= weightBound; ++a)
        for (int bb = 0; bb <= weightBound; ++bb) {
          const Weight w = trace_case_weight(ci, a, bb);
          if (!is_dominant(w) || w[0] - w[2] > weightBound) continue;
          std::ostringstream in;
          in << "p=" << p << ",case=" << kCaseLetters[ci]
             << ",lambda=" << weight_str(w);
          b.add("gamma1-3p-chi", in.str(), gamma1_3p_closed_chi(w, p),
                chi_gamma1(3, p, w).chi);
        }

  {
    const TorsionClass neg1I2(2, 1, 0, 0, 0);
    for (int ci = 0; ci < 8; ++ci)
      for (int a = 0; a <= weightBound; ++a)
        for (int bb = 0; bb <= weightBound; ++bb) {
          const Weight w = trace_case_weight(ci, a, bb);
          if (!is_dominant(w) || w[0] - w[2] > weightBound) continue;
          std::ostringstream in;
          in << "case=" << kCaseLetters[ci] << ",a=" << a << ",b=" << bb
             << ",lambda=" << weight_str(w);
          b.add("trace-neg1-i2", in.str(),
                Rational(trace_neg1_I2_paper(ci, a, bb)),
                Rational(trace_highest_weight(neg1I2, w)));
        }
  }

  for (long long p : primes)
    for (int det = 0; det <= 1; ++det) {
      const auto prof = gamma1_3p_cohomology(det == 1, p);
      const Weight w = det == 1 ? Weight{1, 1, 1} : Weight{0, 0, 0};
      std::ostringstream in;
      in << "p=" << p << ",coeff=" << prof.coefficient
         << ",dims=" << dims_str(prof.dims);
      b.add("gamma1-3p-cohomology", in.str(), alternating_sum(prof.dims),
            chi_gamma1(3, p, w).chi);
    }

  for (long long p : primes) {
    const Rational engine = chi_gamma1_sl(3, p, Weight{0, 0, 0});
    const auto stated = gamma1_3p_sl_cohomology_stated(p);
    const auto substituted = lee_schwermer_profile(p);
    {
      std::ostringstream in;
      in << "p=" << p << ",variant=stated,dims=" << dims_str(stated.dims);
      b.add("gamma1-3p-sl-profile", in.str(), alternating_sum(stated.dims),
            engine);
    }
    {
      std::ostringstream in;
      in << "p=" << p
         << ",variant=substituted,dims=" << dims_str(substituted.dims);
      b.add("gamma1-3p-sl-profile", in.str(),
            alternating_sum(substituted.dims), engine);
    }
  }

  for (int det = 0; det <= 1; ++det) {
    const auto prof = gl4_cohomology(det == 1);
    const Weight w = det == 1 ? Weight{1, 1, 1, 1} : Weight{0, 0, 0, 0};
    std::ostringstream in;
    in << "coeff=" << prof.coefficient << ",dims=" << dims_str(prof.dims);
    b.add("gl4-cohomology", in.str(), alternating_sum(prof.dims),
          chi_gl(4, w).chi);
  }

  for (long long p : primes)
    for (int det = 0; det <= 1; ++det) {
      const Weight w = det == 1 ? Weight{1, 1, 1, 1} : Weight{0, 0, 0, 0};
      std::ostringstream in;
      in << "p=" << p << ",coeff=" << (det == 1 ? "det" : "trivial");
      b.add("gamma1-4p-chi", in.str(), gamma1_4p_chi(det == 1, p),
            chi_gamma1(4, p, w).chi);
    }

  for (long long p : primes) {
    const Weight triv{0, 0, 0, 0, 0};
    const Weight det{1, 1, 1, 1, 1};
    {
      std::ostringstream in;
      in << "p=" << p << ",coeff=trivial";
      b.add("gamma1-5p-chi", in.str(), gamma1_5p_chi(false, p),
            chi_gamma1(5, p, triv).chi);
    }
    const Rational engineDet = chi_gamma1(5, p, det).chi;
    {
      std::ostringstream in;
      in << "p=" << p << ",coeff=det,variant=principal";
      b.add("gamma1-5p-chi", in.str(), gamma1_5p_chi(true, p), engineDet);
    }
    {
      std::ostringstream in;
      in << "p=" << p << ",coeff=det,variant=alt";
      b.add("gamma1-5p-chi", in.str(), gamma1_5p_chi_alt_stated(true, p),
            engineDet);
    }
  }

  return b.records;
}

}  // namespace eulerchi
