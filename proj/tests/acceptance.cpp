// Acceptance suite: every criterion is exact arithmetic; a criterion passes
// only if every one of its equalities holds exactly.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "eulerchi/report.hpp"
#include "eulerchi/resultant.hpp"

using namespace eulerchi;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream log;

  template <typename A, typename B>
  void eq(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
      ok = false;
      log << "      " << what << ": got " << a << ", expected " << b << "\n";
    }
  }

  void is_true(bool v, const std::string& what) {
    if (!v) {
      ok = false;
      log << "      failed: " << what << "\n";
    }
  }
};

std::vector<std::vector<int>> partitions_up_to(int m, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<size_t>(m), 0);
  std::function<void(int, int, int)> recurse = [&](int pos, int maxPart,
                                                   int left) {
    if (pos == m) {
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= std::min(maxPart, left); ++v) {
      current[static_cast<size_t>(pos)] = v;
      recurse(pos + 1, v, left - v);
    }
  };
  recurse(0, bound, bound);
  return out;
}

const std::vector<long long> kPrimes{5, 7, 11, 13};

// 1. Rank-2 table reproduction for m = 0..119.
void criterion_table2(Checker& c) {
  for (int m = 0; m <= 119; ++m) {
    const int l = m / 12, k = m % 12;
    Rational gl, glDet, sl;
    if (k % 2 == 1) {
      gl = glDet = sl = 0;
    } else if (k == 0) {
      gl = -l + 1;
      glDet = -l;
      sl = -2 * l + 1;
    } else if (k == 10) {
      gl = -l - 1;
      glDet = -l - 2;
      sl = -2 * l - 3;
    } else {
      gl = -l;
      glDet = -l - 1;
      sl = -2 * l - 1;
    }
    c.eq(chi_gl(2, {m, 0}).chi, gl, "chi_gl(2,(m,0)) at m=" + std::to_string(m));
    c.eq(chi_gl(2, {m + 1, 1}).chi, glDet,
         "chi_gl(2,(m+1,1)) at m=" + std::to_string(m));
    c.eq(chi_sl(2, {m, 0}), sl, "chi_sl(2,(m,0)) at m=" + std::to_string(m));
  }
}

// 2. Torsion-trace table: h-sequence patterns and the centralizer column.
void criterion_table1(Checker& c) {
  const TorsionClass i2(2, 0, 0, 0, 0), t3(0, 0, 1, 0, 0), t4(0, 0, 0, 1, 0),
      t6(0, 0, 0, 0, 1), f(1, 1, 0, 0, 0);
  const auto hI2 = h_sequence(i2, 48), hT3 = h_sequence(t3, 48),
             hT4 = h_sequence(t4, 48), hT6 = h_sequence(t6, 48),
             hF = h_sequence(f, 48);
  const int pT3[3] = {1, -1, 0};
  const int pT4[4] = {1, 0, -1, 0};
  const int pT6[6] = {1, 1, 0, -1, -1, 0};
  for (int n = 0; n <= 48; ++n) {
    const auto i = static_cast<size_t>(n);
    c.eq(hI2[i], BigInt(n + 1), "h_n(I2)");
    c.eq(hT3[i], BigInt(pT3[n % 3]), "h_n(T3)");
    c.eq(hT4[i], BigInt(pT4[n % 4]), "h_n(T4)");
    c.eq(hT6[i], BigInt(pT6[n % 6]), "h_n(T6)");
    c.eq(hF[i], BigInt(n % 2 == 0 ? 1 : 0), "h_n([1,-1])");
  }
  // chi(C) column: -1/12 is the SL2(Z) value printed for the scalar blocks,
  // twice the GL2(Z) centralizer chi of [I2]
  c.eq(Rational(2) * i2.centralizer_chi(), Rational(-1, 12), "chi column A/B");
  c.eq(t3.centralizer_chi(), Rational(1, 6), "chi column C");
  c.eq(t4.centralizer_chi(), Rational(1, 4), "chi column D");
  c.eq(t6.centralizer_chi(), Rational(1, 6), "chi column E");
  c.eq(f.centralizer_chi(), Rational(1, 4), "chi column F");
}

// 3. Worked resultants, centralizer chis and partial class sums.
void criterion_constants(Checker& c) {
  c.eq(TorsionClass(1, 1, 1, 0, 0).resultant(), BigInt(6), "R(1,-1,T3)");
  c.eq(TorsionClass(1, 1, 0, 1, 0).resultant(), BigInt(8), "R(1,-1,T4)");
  c.eq(TorsionClass(2, 0, 1, 0, 0).resultant(), BigInt(9), "R(I2,T3)");
  c.eq(TorsionClass(2, 0, 0, 0, 1).resultant(), BigInt(1), "R(I2,T6)");
  c.eq(TorsionClass(2, 0, 0, 1, 0).resultant(), BigInt(4), "R(I2,T4)");
  c.eq(TorsionClass(2, 2, 0, 0, 0).resultant(), BigInt(16), "R(I2,-I2)");
  c.eq(resultant(cyclotomic_polynomial(1), cyclotomic_polynomial(3)),
       BigInt(3), "R(1,T3)");
  c.eq(resultant(cyclotomic_polynomial(1), cyclotomic_polynomial(6)),
       BigInt(1), "R(1,T6)");
  c.eq(resultant(cyclotomic_polynomial(3), cyclotomic_polynomial(6)),
       BigInt(4), "R(T3,T6)");
  c.eq(resultant(cyclotomic_polynomial(1), cyclotomic_polynomial(4)),
       BigInt(2), "R(1,T4)");

  const Weight triv4{0, 0, 0, 0};
  c.eq(sigma(4, triv4, 1), Rational(1), "Sigma^(1)(C) at m=4");
  c.eq(sigma(4, triv4, 2), Rational(-1, 12), "Sigma^(2)(C) at m=4");

  const Weight triv5{0, 0, 0, 0, 0};
  auto term = [&](const TorsionClass& cls) {
    return Rational(cls.resultant()) * cls.centralizer_chi() *
           Rational(trace_highest_weight(cls, triv5));
  };
  const Rational t36 = term(TorsionClass(1, 0, 1, 0, 1));
  const Rational t34 = term(TorsionClass(1, 0, 1, 1, 0));
  const Rational t46 = term(TorsionClass(1, 0, 0, 1, 1));
  c.eq(t36, Rational(12, 72), "[1,T3,T6] term");
  c.eq(t34, Rational(6, 48), "[1,T3,T4] term");
  c.eq(t46, Rational(2, 48), "[1,T4,T6] term");
  c.eq(t36 + t34 + t46, Rational(1, 3), "three-class partial sum at m=5");
}

// 4. Gamma_1(2,p) structural identity across weights and twists.
void criterion_gamma1_2p_identity(Checker& c) {
  const TorsionClass oneMinusOne(1, 1, 0, 0, 0);
  for (long long p : kPrimes)
    for (int n = 0; n <= 24; ++n)
      for (int l2 : {0, 1, -3, 7}) {
        const Weight w{n + l2, l2};
        const Rational expected =
            Rational(p - 1, 2) *
                Rational(trace_highest_weight(oneMinusOne, w)) -
            Rational(p * p - 1, 24) * Rational(dim_rep(2, w));
        c.eq(chi_gamma1(2, p, w).chi, expected,
             "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                 " l2=" + std::to_string(l2));
      }
}

// 5. Cusp-form dimensions (weight-2 values are the genus of X_1(p)).
void criterion_cusp_dims(Checker& c) {
  const int genus[4] = {0, 0, 1, 2};
  for (size_t i = 0; i < kPrimes.size(); ++i)
    c.eq(dim_cusp_gamma1p(2, kPrimes[i]), BigInt(genus[i]),
         "dim S_2(Gamma_1(" + std::to_string(kPrimes[i]) + "))");
  c.eq(dim_cusp_gamma1p(3, 7), BigInt(1), "dim S_3(Gamma_1(7))");
  c.eq(dim_cusp_gamma1p(4, 5), BigInt(1), "dim S_4(Gamma_1(5))");
}

// 6. Higher-rank engine values.
void criterion_higher_rank(Checker& c) {
  for (long long p : kPrimes) {
    const Rational f(p - 1), f2(BigInt(p) * p - 1);
    c.eq(chi_gamma1(4, p, {0, 0, 0, 0}).chi, f - f2 / 12,
         "chi(Gamma_1(4," + std::to_string(p) + "),C)");
    c.eq(chi_gamma1(4, p, {1, 1, 1, 1}).chi, -f - f2 / 12,
         "chi(Gamma_1(4," + std::to_string(p) + "),det)");
    c.eq(chi_gamma1(5, p, {0, 0, 0, 0, 0}).chi, -f2 / 3,
         "chi(Gamma_1(5," + std::to_string(p) + "),C)");
  }
  c.eq(chi_sl(4, {0, 0, 0, 0}), Rational(0), "chi(SL_4(Z),C)");
  c.eq(chi_sl(5, {0, 0, 0, 0, 0}), Rational(0), "chi(SL_5(Z),C)");
  c.eq(chi_gl(4, {0, 0, 0, 0}).chi, Rational(1), "chi(GL_4(Z),C)");
  c.eq(chi_gl(4, {1, 1, 1, 1}).chi, Rational(-1), "chi(GL_4(Z),det)");
}

// 7. Lee-Schwermer consistency.
void criterion_lee_schwermer(Checker& c) {
  for (long long p : kPrimes) {
    const auto prof = lee_schwermer_profile(p);
    const Rational alt = alternating_sum(prof.dims);
    const Rational engine = chi_gamma1_sl(3, p, {0, 0, 0});
    c.eq(engine, alt, "profile vs engine at p=" + std::to_string(p));
    c.eq(engine, Rational(p - 1), "value p-1 at p=" + std::to_string(p));
    c.is_true(prof.engineConsistent, "profile flag at p=" + std::to_string(p));
  }
}

// 8. Oracle equivalence: Jacobi-Trudi vs tableaux, Sylvester vs zeta_12.
void criterion_oracles(Checker& c) {
  int traceCases = 0;
  for (int m = 1; m <= 3; ++m) {
    const auto mus = partitions_up_to(m, 8);
    for (const auto& cls : enumerate_classes(m))
      for (const auto& mu : mus) {
        const Weight lambda(mu.begin(), mu.end());
        if (trace_highest_weight(cls, lambda) != trace_oracle(cls, lambda)) {
          c.is_true(false, "trace mismatch " + cls.label());
          return;
        }
        ++traceCases;
      }
  }
  c.is_true(traceCases >= 400, "trace grid covers several hundred cases");

  const int phiIndex[5] = {1, 2, 3, 4, 6};
  const std::vector<int> exps[5] = {{0}, {6}, {4, 8}, {3, 9}, {2, 10}};
  const int maxMult[5] = {2, 2, 1, 1, 1};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int mi = 1; mi <= maxMult[i]; ++mi)
        for (int mj = 1; mj <= maxMult[j]; ++mj) {
          const BigInt direct =
              pow_bigint(resultant(cyclotomic_polynomial(phiIndex[i]),
                                   cyclotomic_polynomial(phiIndex[j])),
                         static_cast<unsigned long>(mi * mj));
          std::vector<int> ei, ej;
          for (int t = 0; t < mi; ++t)
            ei.insert(ei.end(), exps[i].begin(), exps[i].end());
          for (int t = 0; t < mj; ++t)
            ej.insert(ej.end(), exps[j].begin(), exps[j].end());
          c.eq(Rational(direct), resultant_oracle(ei, ej),
               "pair (" + std::to_string(phiIndex[i]) + "," +
                   std::to_string(phiIndex[j]) + ") mult (" +
                   std::to_string(mi) + "," + std::to_string(mj) + ")");
        }
  for (int m = 1; m <= 10; ++m)
    for (const auto& cls : enumerate_classes(m))
      c.is_true(Rational(cls.resultant()) == class_resultant_oracle(cls),
                "class resultant " + cls.label());
}

// 9. Vanishing beyond rank 10.
void criterion_vanishing(Checker& c) {
  c.is_true(enumerate_classes(11).empty(), "no classes at m=11");
  c.eq(chi_gamma1(11, 5, Weight(11, 0)).chi, Rational(0),
       "chi(Gamma_1(11,5),C)");
  for (int m = 11; m <= 12; ++m)
    for (int top = 0; top <= 2; ++top)
      for (int second = 0; second <= top; ++second) {
        Weight w(static_cast<size_t>(m), 0);
        w[0] = top;
        w[1] = second;
        c.eq(chi_gl(m, w).chi, Rational(0),
             "chi_gl(" + std::to_string(m) + ", top=" + std::to_string(top) +
                 ")");
      }
}

// 10. Self-inversion: Tr(A|V) = Tr(A^{-1}|V).
void criterion_self_inversion(Checker& c) {
  for (int m = 1; m <= 5; ++m) {
    const auto mus = partitions_up_to(m, 6);
    for (const auto& cls : enumerate_classes(m)) {
      auto exps = cls.root_exponents();
      auto negated = exps;
      for (int& e : negated) e = (12 - e) % 12;
      std::sort(exps.begin(), exps.end());
      std::sort(negated.begin(), negated.end());
      c.is_true(exps == negated, "exponent negation fixes " + cls.label());

      const auto inversePoly = cls.char_poly().reciprocal();
      c.is_true(inversePoly == cls.char_poly(),
                "self-reciprocal char poly " + cls.label());
      for (const auto& mu : mus) {
        const Weight lambda(mu.begin(), mu.end());
        c.is_true(schur_from_char_poly(inversePoly, mu) ==
                      trace_highest_weight(cls, lambda),
                  "inverse trace " + cls.label());
      }
    }
  }
}

// 11. Odd-weight vanishing for Gamma_1(3,p).
void criterion_odd_vanishing(Checker& c) {
  for (long long p : {5LL, 7LL})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b < a; ++b) {
        const Weight w{2 * a, 2 * b + 1, 0};
        c.eq(chi_gamma1(3, p, w).chi, Rational(0),
             "p=" + std::to_string(p) + " a=" + std::to_string(a) +
                 " b=" + std::to_string(b));
      }
}

// 12. Audit content, against the committed golden report.
void criterion_audit(Checker& c) {
  const auto records = audit({5, 7}, 4);
  for (const auto& r : records) {
    const bool gamma2pFamily = r.formula.rfind("gamma1-2p", 0) == 0 ||
                               r.formula == "cusp-dim-gamma1p";
    if (gamma2pFamily)
      c.is_true(r.equal, "Gamma_1(2,p) family row differs: " + r.inputs);
    if (r.formula == "gamma1-4p-chi")
      c.is_true(r.equal, "Gamma_1(4,p) row differs: " + r.inputs);
    if (r.formula == "gamma1-5p-chi" &&
        r.inputs.find("coeff=trivial") != std::string::npos)
      c.is_true(r.equal, "Gamma_1(5,p) trivial row differs: " + r.inputs);
    if (r.formula == "sl3-chi" &&
        r.inputs.find("case=[2a,2b],a=0,b=0") != std::string::npos)
      c.is_true(!r.equal, "sl3 trivial finding missing");
    if (r.formula == "trace-neg1-i2") {
      const bool cd = r.inputs.find("case=c") != std::string::npos ||
                      r.inputs.find("case=d") != std::string::npos;
      c.is_true(r.equal != cd, "trace finding pattern at " + r.inputs);
    }
    if (r.formula == "gamma1-3p-cohomology" ||
        r.formula == "gamma1-3p-sl-profile") {
      // the two stated profile variants disagree in sign; the audit reports
      // the conflict rather than resolving it
      const bool substituted =
          r.inputs.find("variant=substituted") != std::string::npos;
      c.is_true(r.equal == substituted, "profile conflict at " + r.inputs);
    }
  }

  const std::string goldenPath = std::string(GOLDEN_DIR) + "/audit_p5_7_bound4.csv";
  std::ifstream in(goldenPath, std::ios::binary);
  if (!in) {
    c.is_true(false, "golden file missing: " + goldenPath);
    return;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  c.is_true(buffer.str() == render_audit(records, Format::Csv),
            "audit report differs from the committed golden file");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria{
      {"table2-reproduction", criterion_table2},
      {"table1-reproduction", criterion_table1},
      {"worked-constants", criterion_constants},
      {"gamma1-2p-structural-identity", criterion_gamma1_2p_identity},
      {"cusp-form-dimensions", criterion_cusp_dims},
      {"higher-rank-engine-values", criterion_higher_rank},
      {"lee-schwermer-consistency", criterion_lee_schwermer},
      {"oracle-equivalence", criterion_oracles},
      {"rank-vanishing", criterion_vanishing},
      {"self-inversion", criterion_self_inversion},
      {"odd-weight-vanishing", criterion_odd_vanishing},
      {"audit-report", criterion_audit},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.log << "      exception: " << e.what() << "\n";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
              << criteria[i].name << "\n";
    if (!c.ok) {
      std::cout << c.log.str();
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
