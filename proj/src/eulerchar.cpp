#include "eulerchi/eulerchar.hpp"

namespace eulerchi {

std::string group_name(Group g) {
  switch (g) {
    case Group::GL:
      return "gl";
    case Group::SL:
      return "sl";
    case Group::Gamma1:
      return "gamma1";
    case Group::Gamma1SL:
      return "gamma1-sl";
  }
  return "?";
}

namespace {

void check_gl_args(int m, const Weight& lambda) {
  require(m >= 1, "m must be positive");
  require(static_cast<int>(lambda.size()) == m,
          "weight length must equal m");
  require(is_dominant(lambda), "weight must be dominant");
}

void check_gamma1_args(int m, long long p, const Weight& lambda) {
  require(m >= 2, "gamma1: m must be at least 2");
  require(p >= 5, "gamma1: p must be a prime >= 5");
  require(is_prime(p), "gamma1: p must be prime");
  require(static_cast<int>(lambda.size()) == m,
          "weight length must equal m");
  require(is_dominant(lambda), "weight must be dominant");
}

// combined = Tr(A|V) + Tr(A|V (x) det) = (1 + det A) Tr(A|V)
ClassContribution make_contribution(const TorsionClass& cls,
                                    const Weight& lambda, bool combined) {
  ClassContribution c;
  c.label = cls.label();
  c.r = cls.resultant();
  c.chiC = cls.centralizer_chi();
  c.trace = trace_highest_weight(cls, lambda);
  if (combined) c.trace *= 1 + cls.det();
  c.contribution = Rational(c.r) * c.chiC * Rational(c.trace);
  return c;
}

ChiResult class_sum(Group group, int m, const Weight& lambda, bool combined) {
  ChiResult res;
  res.group = group;
  res.m = m;
  res.weight = lambda;
  for (const auto& cls : enumerate_classes(m)) {
    auto c = make_contribution(cls, lambda, combined);
    res.chi += c.contribution;
    res.breakdown.push_back(std::move(c));
  }
  return res;
}

ChiResult gamma1_sum(Group group, int m, long long p, const Weight& lambda,
                     bool combined) {
  const Rational w1 = Rational(BigInt(p) - 1);
  const Rational w2 = Rational(BigInt(p) * p - 1);
  ChiResult res;
  res.group = group;
  res.m = m;
  res.p = p;
  res.weight = lambda;
  res.sigma1 = Rational(0);
  res.sigma2 = Rational(0);
  for (const auto& cls : enumerate_classes(m)) {
    const int um = cls.unit_multiplicity();
    if (um != 1 && um != 2) continue;
    auto c = make_contribution(cls, lambda, combined);
    if (um == 1) {
      *res.sigma1 += c.contribution;
      c.weightFactor = numerator(w1);
    } else {
      *res.sigma2 += c.contribution;
      c.weightFactor = numerator(w2);
    }
    res.breakdown.push_back(std::move(c));
  }
  res.chi = w1 * *res.sigma1 + w2 * *res.sigma2;
  return res;
}

}  // namespace

ChiResult chi_gl(int m, const Weight& lambda) {
  check_gl_args(m, lambda);
  return class_sum(Group::GL, m, lambda, false);
}

Rational chi_sl(int m, const Weight& lambda) {
  return chi_sl_result(m, lambda).chi;
}

ChiResult chi_sl_result(int m, const Weight& lambda) {
  check_gl_args(m, lambda);
  return class_sum(Group::SL, m, lambda, true);
}

Rational sigma(int m, const Weight& lambda, int k) {
  check_gl_args(m, lambda);
  require(k == 1 || k == 2, "sigma: k must be 1 or 2");
  Rational s = 0;
  for (const auto& cls : enumerate_classes(m)) {
    if (cls.unit_multiplicity() != k) continue;
    s += Rational(cls.resultant()) * cls.centralizer_chi() *
         Rational(trace_highest_weight(cls, lambda));
  }
  return s;
}

ChiResult chi_gamma1(int m, long long p, const Weight& lambda) {
  check_gamma1_args(m, p, lambda);
  return gamma1_sum(Group::Gamma1, m, p, lambda, false);
}

Rational chi_gamma1_sl(int m, long long p, const Weight& lambda) {
  return chi_gamma1_sl_result(m, p, lambda).chi;
}

ChiResult chi_gamma1_sl_result(int m, long long p, const Weight& lambda) {
  check_gamma1_args(m, p, lambda);
  return gamma1_sum(Group::Gamma1SL, m, p, lambda, true);
}

void self_check(const ChiResult& result) {
  const bool gamma = result.group == Group::Gamma1 || result.group == Group::Gamma1SL;
  const bool combined =
      result.group == Group::SL || result.group == Group::Gamma1SL;
  Rational total = 0;
  int muSize = 0;
  if (!result.weight.empty()) {
    for (int part : result.weight) muSize += part - result.weight.back();
  }
  for (const auto& cls : enumerate_classes(result.m)) {
    const int um = cls.unit_multiplicity();
    if (gamma && um != 1 && um != 2) continue;

    ensure(Rational(cls.resultant()) == class_resultant_oracle(cls),
           "self-check: resultant mismatch for class " + cls.label());

    BigInt tr = trace_highest_weight(cls, result.weight);
    if (cls.degree() <= 4 && muSize <= 12) {
      ensure(tr == trace_oracle(cls, result.weight),
             "self-check: trace mismatch for class " + cls.label());
    }
    if (combined) tr *= 1 + cls.det();
    Rational contribution =
        Rational(cls.resultant()) * cls.centralizer_chi() * Rational(tr);
    if (gamma) {
      const BigInt p(*result.p);
      contribution *= um == 1 ? Rational(p - 1) : Rational(p * p - 1);
    }
    total += contribution;
  }
  ensure(total == result.chi, "self-check: class sum does not match chi");
}

}  // namespace eulerchi
