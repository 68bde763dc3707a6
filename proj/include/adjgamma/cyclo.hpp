#pragma once

#include <complex>
#include <string>
#include <vector>

#include "adjgamma/rational.hpp"

namespace adjgamma {

/* Element of Q(zeta_N), stored in the power basis 1, z, ..., z^{phi(N)-1}
 * with z = exp(2 pi i / N). Binary operations embed both operands into the
 * field of lcm conductor; minimized() reduces to the smallest conductor. */
class Cyclo {
 public:
  Cyclo() : n_(1), c_{Rational(0)} {}
  Cyclo(int v) : n_(1), c_{Rational(v)} {}
  Cyclo(long v) : n_(1), c_{Rational(v)} {}
  Cyclo(const Rational& v) : n_(1), c_{v} {}
  // Arbitrary coefficients on powers of zeta_N (reduced modulo Phi_N).
  Cyclo(long n, const std::vector<Rational>& powers);

  static Cyclo zeta(long n, long k = 1);
  // exp(2 pi i t) for rational t.
  static Cyclo from_turn(const Rational& t);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo inverse() const;
  Cyclo conj() const;
  Cyclo galois(long k) const;  // zeta -> zeta^k, gcd(k, N) = 1
  Cyclo embed(long m) const;   // m must be a multiple of conductor()
  Cyclo minimized() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  long n_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }

long euler_phi(long n);
// Coefficients of the n-th cyclotomic polynomial, increasing degree.
const std::vector<Rational>& cyclotomic_poly(long n);

}  // namespace adjgamma
