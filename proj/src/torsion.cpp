#include "eulerchi/torsion.hpp"

#include <sstream>

#include "eulerchi/resultant.hpp"

namespace eulerchi {

namespace {

struct FactorInfo {
  int phi_n;        // index of the cyclotomic factor
  int degree;       // degree of one copy
  int exps[2];      // 12th-root exponents of one copy
  const char* one;  // label at multiplicity 1
  const char* two;  // label at multiplicity 2 (1 and -1 only)
};

constexpr FactorInfo kFactors[5] = {
    {1, 1, {0, 0}, "1", "I2"},    {2, 1, {6, 0}, "-1", "-I2"},
    {3, 2, {4, 8}, "T3", nullptr}, {4, 2, {3, 9}, "T4", nullptr},
    {6, 2, {2, 10}, "T6", nullptr},
};

const BigInt& base_resultant(int i, int j) {
  // Pairwise resultants of the five cyclotomic factors, canonical order
  // Phi_1 < Phi_2 < Phi_3 < Phi_4 < Phi_6 with the earlier factor's roots
  // as the alphas.
  static const auto table = [] {
    std::array<std::array<BigInt, 5>, 5> t{};
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        if (a == b) continue;
        t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            resultant(cyclotomic_polynomial(kFactors[a].phi_n),
                      cyclotomic_polynomial(kFactors[b].phi_n));
      }
    return t;
  }();
  return table[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

}  // namespace

TorsionClass::TorsionClass(int a, int b, int c, int d, int e)
    : mult_{a, b, c, d, e} {
  require(a >= 0 && a <= 2 && b >= 0 && b <= 2,
          "TorsionClass: eigenvalues 1 and -1 have multiplicity at most two");
  require(c >= 0 && c <= 1 && d >= 0 && d <= 1 && e >= 0 && e <= 1,
          "TorsionClass: T3, T4, T6 appear at most once");
  require(a + b + c + d + e > 0, "TorsionClass: empty class");
}

int TorsionClass::degree() const {
  int deg = 0;
  for (int i = 0; i < 5; ++i) deg += mult(i) * kFactors[i].degree;
  return deg;
}

std::string TorsionClass::label() const {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    const int m = mult(i);
    if (m == 0) continue;
    auto emit = [&](const char* name) {
      if (!first) out << ",";
      out << name;
      first = false;
    };
    if (m == 2) {
      emit(kFactors[i].two);
    } else {
      emit(kFactors[i].one);
    }
  }
  out << "]";
  return out.str();
}

IntPolynomial TorsionClass::char_poly() const {
  IntPolynomial f = IntPolynomial::one();
  for (int i = 0; i < 5; ++i)
    f = f * cyclotomic_polynomial(kFactors[i].phi_n).pow(mult(i));
  return f;
}

BigInt TorsionClass::resultant() const {
  // R(A) = prod over pairs of distinct present factors; a single
  // irreducible-power factor contributes R = 1.
  BigInt r = 1;
  for (int i = 0; i < 5; ++i) {
    if (mult(i) == 0) continue;
    for (int j = i + 1; j < 5; ++j) {
      if (mult(j) == 0) continue;
      r *= pow_bigint(base_resultant(i, j),
                      static_cast<unsigned long>(mult(i) * mult(j)));
    }
  }
  return r;
}

Rational TorsionClass::centralizer_chi() const {
  Rational chi = 1;
  for (const auto& [kind, factorChi] : centralizer_shape()) chi *= factorChi;
  return chi;
}

std::vector<std::pair<std::string, Rational>> TorsionClass::centralizer_shape()
    const {
  // GL_1(Z) = {+-1} per simple +-1 eigenvalue, GL_2(Z) per doubled one,
  // Eisenstein units C6 for the order-3/6 blocks, Gaussian units C4 for the
  // order-4 block.
  std::vector<std::pair<std::string, Rational>> shape;
  for (int i = 0; i < 2; ++i) {
    if (mult(i) == 1) shape.emplace_back("GL1(Z)", Rational(1, 2));
    if (mult(i) == 2) shape.emplace_back("GL2(Z)", Rational(-1, 24));
  }
  if (mult(2) == 1) shape.emplace_back("C6", Rational(1, 6));
  if (mult(3) == 1) shape.emplace_back("C4", Rational(1, 4));
  if (mult(4) == 1) shape.emplace_back("C6", Rational(1, 6));
  return shape;
}

std::vector<int> TorsionClass::factor_exponents(int i) const {
  std::vector<int> exps;
  for (int copy = 0; copy < mult(i); ++copy)
    for (int k = 0; k < kFactors[i].degree; ++k)
      exps.push_back(kFactors[i].exps[k]);
  return exps;
}

std::vector<int> TorsionClass::root_exponents() const {
  std::vector<int> exps;
  for (int i = 0; i < 5; ++i) {
    auto fe = factor_exponents(i);
    exps.insert(exps.end(), fe.begin(), fe.end());
  }
  return exps;
}

std::vector<TorsionClass> enumerate_classes(int m) {
  require(m >= 1, "enumerate_classes: m must be positive");
  std::vector<TorsionClass> classes;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 1; ++c)
        for (int d = 0; d <= 1; ++d)
          for (int e = 0; e <= 1; ++e) {
            if (a + b + 2 * (c + d + e) != m) continue;
            classes.emplace_back(a, b, c, d, e);
          }
  return classes;
}

Rational class_resultant_oracle(const TorsionClass& cls) {
  Rational r = 1;
  for (int i = 0; i < 5; ++i) {
    if (cls.mult(i) == 0) continue;
    for (int j = i + 1; j < 5; ++j) {
      if (cls.mult(j) == 0) continue;
      r *= resultant_oracle(cls.factor_exponents(i), cls.factor_exponents(j));
    }
  }
  return r;
}

}  // namespace eulerchi
