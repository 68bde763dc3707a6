#include "adjgamma/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace adjgamma {

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view v) {
    size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i >= v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string a = t.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!a.empty() && a[0] == '+') a.erase(0, 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
  mpz_class num(a), den(b);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational frac(const Rational& r) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational f = r - Rational(fl);
  return f;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large");
  return z.get_si();
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace adjgamma
