#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace eulerchi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a double-entry cross check (direct computation vs oracle)
// fails. Indicates a bug in this library, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

// (-1)^k, valid for negative k.
inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

BigInt pow_bigint(const BigInt& base, unsigned long exp);

// "num/den", or the bare integer when den == 1.
std::string rational_str(const Rational& r);

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination; every intermediate division is exact. Consumes the matrix.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m);

bool is_prime(long long n);

}  // namespace eulerchi
