#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adjgamma {

using Rational = mpq_class;

/* Parses "p/q", "p" or "-p/q". Throws std::invalid_argument. */
Rational parse_rational(std::string_view s);

std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Canonicalized a/b (mpq_class(a, b) does not reduce).
inline Rational rat(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/* Fractional part in [0,1). */
Rational frac(const Rational& r);

long long to_ll(const mpz_class& z);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace adjgamma
