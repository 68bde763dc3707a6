#pragma once

#include <string>
#include <vector>

#include "adjgamma/cyclo.hpp"
#include "adjgamma/rational.hpp"

namespace adjgamma {

class QRatFun;

/* exp(2 pi i turn) * q^qexp, turn kept in [0,1). */
struct QMonomial {
  Rational turn;
  Rational qexp;

  QMonomial() : turn(0), qexp(0) {}
  QMonomial(const Rational& t, const Rational& e) : turn(frac(t)), qexp(e) {
    turn.canonicalize();
    qexp.canonicalize();
  }
  static QMonomial one() { return {}; }
  static QMonomial q_power(const Rational& e) { return {Rational(0), e}; }
  static QMonomial root_of_unity(long n, long k) { return {rat(k, n), Rational(0)}; }

  bool is_one() const { return sgn(turn) == 0 && sgn(qexp) == 0; }
  bool is_unitary() const { return sgn(qexp) == 0; }
  QMonomial inverse() const { return {-turn, -qexp}; }
  QMonomial conj() const { return {-turn, qexp}; }
  QMonomial pow(long k) const { return {turn * k, qexp * k}; }
  QMonomial operator*(const QMonomial& o) const { return {turn + o.turn, qexp + o.qexp}; }
  QMonomial operator/(const QMonomial& o) const { return *this * o.inverse(); }
  bool operator==(const QMonomial& o) const { return turn == o.turn && qexp == o.qexp; }
  bool operator!=(const QMonomial& o) const { return !(*this == o); }
  bool operator<(const QMonomial& o) const {
    if (turn != o.turn) return turn < o.turn;
    return qexp < o.qexp;
  }
  // All m-th roots.
  std::vector<QMonomial> roots(long m) const;
  Cyclo unit() const { return Cyclo::from_turn(turn); }
  QRatFun to_qratfun() const;
  std::string to_string() const;
};

}  // namespace adjgamma
