#include "adjgamma/uratfun.hpp"

#include <sstream>
#include <stdexcept>

namespace adjgamma {

URatFun::URatFun(UPoly num, UPoly den) {
  if (den.zero()) throw std::domain_error("URatFun: zero denominator");
  if (num.zero()) {
    *this = URatFun();
    return;
  }
  UPoly g = UPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  QRatFun inv = QRatFun(1) / den.leading();
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

URatFun URatFun::from_coprime(UPoly num, UPoly den) {
  if (den.zero()) throw std::domain_error("URatFun: zero denominator");
  URatFun r;
  if (num.zero()) return r;
  QRatFun inv = QRatFun(1) / den.leading();
  r.num_ = num.scaled(inv);
  r.den_ = den.scaled(inv);
  return r;
}

URatFun URatFun::from_laurent(UPoly num, UPoly den, int shift) {
  if (shift >= 0) return URatFun(num.shifted(shift), std::move(den));
  return URatFun(std::move(num), den.shifted(-shift));
}

URatFun operator+(const URatFun& a, const URatFun& b) {
  return URatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

URatFun operator-(const URatFun& a, const URatFun& b) {
  return URatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

URatFun operator*(const URatFun& a, const URatFun& b) { return URatFun(a.num_ * b.num_, a.den_ * b.den_); }

URatFun operator/(const URatFun& a, const URatFun& b) {
  if (b.is_zero()) throw std::domain_error("URatFun division by zero");
  return URatFun(a.num_ * b.den_, a.den_ * b.num_);
}

URatFun URatFun::pow(long k) const {
  if (k < 0) return (URatFun(QRatFun(1)) / *this).pow(-k);
  URatFun r(QRatFun(1));
  for (long i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::pair<int, QRatFun> taylor_at_one(UPoly p) {
  if (p.zero()) throw std::domain_error("taylor_at_one: zero polynomial");
  int order = 0;
  for (;;) {
    QRatFun v = p.eval_at_one();
    if (!v.is_zero()) return {order, v};
    // Synthetic division by (u - 1).
    const auto& c = p.coeffs();
    std::vector<QRatFun> q(c.size() - 1);
    QRatFun acc;
    for (size_t i = c.size() - 1; i >= 1; --i) {
      acc = acc + c[i];
      q[i - 1] = acc;
    }
    p = UPoly(std::move(q));
    ++order;
  }
}

UOneLimit URatFun::limit_at_u_one() const {
  if (num_.zero()) throw std::domain_error("limit_at_u_one: identically zero");
  auto [zn, vn] = taylor_at_one(num_);
  auto [zd, vd] = taylor_at_one(den_);
  return UOneLimit{zn - zd, vn / vd};
}

std::complex<double> URatFun::eval_numeric(double q0, std::complex<double> u0) const {
  auto ev = [&](const UPoly& p) {
    std::complex<double> r = 0;
    for (size_t i = p.coeffs().size(); i-- > 0;) r = r * u0 + p.coeffs()[i].eval_numeric(q0);
    return r;
  };
  std::complex<double> d = ev(den_);
  if (std::abs(d) < 1e-14) throw std::domain_error("URatFun: pole at evaluation point");
  return ev(num_) / d;
}

std::string URatFun::to_string() const {
  auto ps = [](const UPoly& p) {
    if (p.zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const QRatFun& c = p.coeffs()[i];
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")";
      if (i == 1) os << "*u";
      if (i > 1) os << "*u^" << i;
    }
    return os.str();
  };
  if (den_.degree() == 0) return ps(num_);
  return "[" + ps(num_) + "] / [" + ps(den_) + "]";
}

}  // namespace adjgamma
