#include "eulerchi/cyc12.hpp"

namespace eulerchi {

Cyc12::Cyc12(Rational r) { c_[0] = std::move(r); }

Cyc12::Cyc12(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

Cyc12 Cyc12::root(int k) {
  k %= 12;
  if (k < 0) k += 12;
  // z^6 = -1, and z^4 = z^2 - 1 folds the upper half of the power basis.
  int sign = 1;
  if (k >= 6) {
    sign = -1;
    k -= 6;
  }
  Cyc12 r;
  switch (k) {
    case 0:
    case 1:
    case 2:
    case 3:
      r.c_[static_cast<size_t>(k)] = sign;
      break;
    case 4:  // z^4 = z^2 - 1
      r.c_[2] = sign;
      r.c_[0] = -sign;
      break;
    case 5:  // z^5 = z^3 - z
      r.c_[3] = sign;
      r.c_[1] = -sign;
      break;
  }
  return r;
}

bool Cyc12::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rational Cyc12::rational_value() const {
  ensure(is_rational(), "Cyc12: element is not rational");
  return c_[0];
}

Cyc12& Cyc12::operator+=(const Cyc12& o) {
  for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

Cyc12& Cyc12::operator-=(const Cyc12& o) {
  for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

Cyc12& Cyc12::operator*=(const Cyc12& o) {
  // Convolve to degree 6, then reduce by z^4 = z^2 - 1 (hence z^5 = z^3 - z,
  // z^6 = -1).
  std::array<Rational, 7> w{};
  for (size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      w[i + j] += c_[i] * o.c_[j];
    }
  }
  c_[0] = w[0] - w[4] - w[6];
  c_[1] = w[1] - w[5];
  c_[2] = w[2] + w[4];
  c_[3] = w[3] + w[5];
  return *this;
}

Cyc12 Cyc12::operator-() const {
  Cyc12 r;
  for (size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

}  // namespace eulerchi
