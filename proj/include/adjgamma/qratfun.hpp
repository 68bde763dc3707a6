#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "adjgamma/cyclo.hpp"
#include "adjgamma/poly.hpp"
#include "adjgamma/qmonomial.hpp"

namespace adjgamma {

using WPoly = Poly<Cyclo>;

/* Rational function num(w)/den(w) with w^M = q and cyclotomic coefficients.
 * Canonical form: num and den coprime, den monic. M is not forced minimal;
 * arithmetic results are returned with minimal M. */
class QRatFun {
 public:
  QRatFun() : m_(1), num_(), den_(Cyclo(1)) {}
  QRatFun(int v) : QRatFun(Cyclo(v)) {}
  QRatFun(const Rational& v) : QRatFun(Cyclo(v)) {}
  QRatFun(const Cyclo& v) : m_(1), num_(v), den_(Cyclo(1)) {}
  QRatFun(WPoly num, WPoly den, long m);

  static QRatFun q() { return q_power(Rational(1)); }
  static QRatFun q_power(const Rational& e);
  // Trusted constructor: num, den already coprime with den monic.
  static QRatFun from_canonical(WPoly num, WPoly den, long m);

  long M() const { return m_; }
  const WPoly& num() const { return num_; }
  const WPoly& den() const { return den_; }
  bool is_zero() const { return num_.zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Cyclo constant_value() const;  // throws unless is_constant()

  QRatFun operator-() const;
  friend QRatFun operator+(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b);
  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator/=(const QRatFun& o) { return *this = *this / o; }
  friend bool operator==(const QRatFun& a, const QRatFun& b);
  friend bool operator!=(const QRatFun& a, const QRatFun& b) { return !(a == b); }

  QRatFun pow(long k) const;
  QRatFun times_q_power(const Rational& e) const;
  QRatFun times_scalar(const Cyclo& c) const;
  // Same value expressed with w' = w^{1/k}, M' = kM (not canonical in M).
  QRatFun rescaled(long k) const;
  QRatFun with_minimal_M() const;

  // Complex conjugation of coefficients; q and w are real.
  QRatFun conj() const;
  // Value at q = q0 > 0 with the positive real root for w. Throws at poles.
  std::complex<double> eval_numeric(const Rational& q0) const;
  std::complex<double> eval_numeric(double q0) const;
  // Value at q = 1. Throws std::domain_error at a pole.
  Cyclo eval_at_q_one() const;
  // c with a = c * b when the ratio is a constant, nullopt otherwise.
  static std::optional<Cyclo> proportionality(const QRatFun& a, const QRatFun& b);

  std::string to_string() const;

 private:
  long m_;
  WPoly num_, den_;
};

inline bool is_zero(const QRatFun& f) { return f.is_zero(); }

/* Product scalar * q^e * prod (1 - m_i)^{k_i} kept in factored form so that
 * cancellation is done on small factors before expansion. */
class FactoredValue {
 public:
  FactoredValue() : scalar_(1), qexp_(0) {}
  explicit FactoredValue(const Cyclo& c) : scalar_(c), qexp_(0) {}

  FactoredValue& times_scalar(const Cyclo& c);
  FactoredValue& times_q_power(const Rational& e);
  FactoredValue& times_monomial(const QMonomial& m);
  // Multiplies by (1 - m)^power. Unitary constant factors go to the scalar.
  FactoredValue& times_one_minus(const QMonomial& m, int power = 1);
  FactoredValue& times_one_plus(const QMonomial& m, int power = 1);
  FactoredValue& operator*=(const FactoredValue& o);
  FactoredValue inverse() const;

  bool is_zero() const { return scalar_.is_zero(); }
  QRatFun to_qratfun() const;

 private:
  Cyclo scalar_;
  Rational qexp_;
  std::vector<std::pair<QMonomial, int>> factors_;
};

}  // namespace adjgamma
