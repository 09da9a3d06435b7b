#include "eulerchi/characters.hpp"

#include <algorithm>

#include "eulerchi/cyc12.hpp"

namespace eulerchi {

bool is_dominant(const Weight& lambda) {
  for (size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i - 1] < lambda[i]) return false;
  return true;
}

Weight det_twist(const Weight& lambda, int k) {
  Weight out = lambda;
  for (int& part : out) part += k;
  return out;
}

std::vector<BigInt> h_sequence(const IntPolynomial& charPoly, int n) {
  require(n >= 0, "h_sequence: n must be nonnegative");
  require(charPoly.is_monic() && charPoly.degree() >= 1,
          "h_sequence: characteristic polynomial must be monic, nonconstant");
  const int m = charPoly.degree();
  std::vector<BigInt> h(static_cast<size_t>(n) + 1);
  h[0] = 1;
  // prod(1 - r_i t) = sum_j coeff(m-j) t^j, so the h generating series
  // inverts it term by term.
  for (int t = 1; t <= n; ++t) {
    BigInt acc = 0;
    for (int j = 1; j <= std::min(t, m); ++j)
      acc += charPoly.coeff(m - j) * h[static_cast<size_t>(t - j)];
    h[static_cast<size_t>(t)] = -acc;
  }
  return h;
}

std::vector<BigInt> h_sequence(const TorsionClass& cls, int n) {
  return h_sequence(cls.char_poly(), n);
}

BigInt schur_from_char_poly(const IntPolynomial& charPoly,
                            const std::vector<int>& mu) {
  const int m = charPoly.degree();
  require(static_cast<int>(mu.size()) == m,
          "schur: partition length must equal the rank");
  for (size_t i = 0; i < mu.size(); ++i) {
    require(mu[i] >= 0, "schur: partition parts must be nonnegative");
    require(i == 0 || mu[i - 1] >= mu[i], "schur: parts must be decreasing");
  }
  if (m == 0) return 1;
  const int n = mu[0] + m;  // covers every Jacobi-Trudi index
  const auto h = h_sequence(charPoly, n);
  std::vector<std::vector<BigInt>> jt(
      static_cast<size_t>(m), std::vector<BigInt>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int idx = mu[static_cast<size_t>(i)] - i + j;
      jt[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (idx < 0) ? BigInt(0) : h[static_cast<size_t>(idx)];
    }
  return det_bareiss(std::move(jt));
}

namespace {

// lambda = mu + k(1,...,1) with k = lambda_m; keeps Jacobi-Trudi in
// partition territory, the det(A)^k factor is restored by the caller.
std::pair<std::vector<int>, int> split_det_twist(const Weight& lambda) {
  const int k = lambda.back();
  std::vector<int> mu(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) mu[i] = lambda[i] - k;
  return {std::move(mu), k};
}

void check_weight(const TorsionClass& cls, const Weight& lambda) {
  require(static_cast<int>(lambda.size()) == cls.degree(),
          "trace: weight length must equal the class degree");
  require(is_dominant(lambda), "trace: weight must be dominant");
}

// Sums the eigenvalue monomials over all semistandard tableaux of shape mu
// with entries 1..m, tracking only the total 12th-root exponent per tableau.
class TableauSum {
 public:
  TableauSum(const std::vector<int>& mu, std::vector<int> exps)
      : mu_(mu), exps_(std::move(exps)), m_(static_cast<int>(exps_.size())) {
    rows_ = 0;
    while (rows_ < static_cast<int>(mu_.size()) && mu_[static_cast<size_t>(rows_)] > 0) ++rows_;
    cells_.assign(static_cast<size_t>(rows_),
                  std::vector<int>(static_cast<size_t>(rows_ ? mu_[0] : 0), 0));
  }

  Cyc12 run() {
    counts_.fill(0);
    if (rows_ == 0) {
      counts_[0] = 1;  // the empty tableau
    } else {
      fill(0, 0, 0);
    }
    Cyc12 total;
    for (int r = 0; r < 12; ++r)
      if (counts_[static_cast<size_t>(r)] != 0)
        total += Cyc12(Rational(counts_[static_cast<size_t>(r)])) * Cyc12::root(r);
    return total;
  }

 private:
  void fill(int r, int c, int expSum) {
    if (c == mu_[static_cast<size_t>(r)]) {
      ++r;
      c = 0;
      if (r == rows_) {
        ++counts_[static_cast<size_t>(expSum % 12)];
        return;
      }
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cells_[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, cells_[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= m_; ++v) {
      cells_[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      fill(r, c + 1, expSum + exps_[static_cast<size_t>(v - 1)]);
    }
  }

  const std::vector<int>& mu_;
  std::vector<int> exps_;
  int m_;
  int rows_;
  std::vector<std::vector<int>> cells_;
  std::array<long long, 12> counts_{};
};

}  // namespace

BigInt trace_highest_weight(const TorsionClass& cls, const Weight& lambda) {
  check_weight(cls, lambda);
  auto [mu, k] = split_det_twist(lambda);
  const BigInt s = schur_from_char_poly(cls.char_poly(), mu);
  return cls.det() == 1 ? s : parity_sign(k) * s;
}

BigInt trace_oracle(const TorsionClass& cls, const Weight& lambda) {
  check_weight(cls, lambda);
  auto [mu, k] = split_det_twist(lambda);
  int size = 0;
  for (int part : mu) size += part;
  require(cls.degree() <= 4 && size <= 12,
          "trace_oracle: guarded to degree <= 4 and |mu| <= 12");

  const Cyc12 value = TableauSum(mu, cls.root_exponents()).run();
  Rational r = value.rational_value();
  ensure(denominator(r) == 1, "trace_oracle: character value not integral");
  BigInt t = numerator(r);
  return cls.det() == 1 ? t : parity_sign(k) * t;
}

BigInt dim_rep(int m, const Weight& lambda) {
  require(m >= 1, "dim_rep: rank must be positive");
  require(static_cast<int>(lambda.size()) == m,
          "dim_rep: weight length must equal the rank");
  require(is_dominant(lambda), "dim_rep: weight must be dominant");
  auto [mu, k] = split_det_twist(lambda);
  (void)k;  // det of the identity is 1
  return schur_from_char_poly(cyclotomic_polynomial(1).pow(m), mu);
}

}  // namespace eulerchi
