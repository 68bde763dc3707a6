#pragma once

#include <complex>
#include <string>

#include "adjgamma/poly.hpp"
#include "adjgamma/qratfun.hpp"

namespace adjgamma {

using UPoly = Poly<QRatFun>;

/* Leading behaviour at u = 1: f(u) ~ leading * (u - 1)^order.
 * order > 0 is a zero, order < 0 a pole, order == 0 a finite nonzero value. */
struct UOneLimit {
  int order = 0;
  QRatFun leading = QRatFun(1);

  bool finite_nonzero() const { return order == 0; }
  UOneLimit& operator*=(const UOneLimit& o) {
    order += o.order;
    leading *= o.leading;
    return *this;
  }
};

/* Rational function in u = q^{-s} with coefficients in QRatFun.
 * Canonical: coprime, monic denominator. */
class URatFun {
 public:
  URatFun() : num_(), den_(QRatFun(1)) {}
  URatFun(const QRatFun& c) : num_(c), den_(QRatFun(1)) {}
  URatFun(UPoly num, UPoly den);
  // num * u^shift / den, shift may be negative.
  static URatFun from_laurent(UPoly num, UPoly den, int shift);
  // Caller guarantees gcd(num, den) = 1; only the denominator is made monic.
  static URatFun from_coprime(UPoly num, UPoly den);
  static URatFun u() { return URatFun(UPoly::x(), UPoly(QRatFun(1))); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.zero(); }

  friend URatFun operator+(const URatFun& a, const URatFun& b);
  friend URatFun operator-(const URatFun& a, const URatFun& b);
  friend URatFun operator*(const URatFun& a, const URatFun& b);
  friend URatFun operator/(const URatFun& a, const URatFun& b);
  friend bool operator==(const URatFun& a, const URatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  URatFun pow(long k) const;

  UOneLimit limit_at_u_one() const;
  std::complex<double> eval_numeric(double q0, std::complex<double> u0) const;
  std::string to_string() const;

 private:
  UPoly num_, den_;
};

// Order of vanishing at u = 1 and the value of p / (u-1)^order there.
std::pair<int, QRatFun> taylor_at_one(UPoly p);

}  // namespace adjgamma
