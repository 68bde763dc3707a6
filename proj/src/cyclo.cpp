#include "adjgamma/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "adjgamma/poly.hpp"

namespace adjgamma {

namespace {

using QPoly = Poly<Rational>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Reduces raw (any length) modulo Phi_n into a vector of length phi(n).
std::vector<Rational> reduce(std::vector<Rational> raw, long n) {
  const auto& phi = cyclotomic_poly(n);
  size_t d = phi.size() - 1;
  for (size_t i = raw.size(); i-- > d;) {
    if (sgn(raw[i]) == 0) continue;
    Rational t = raw[i];
    for (size_t j = 0; j < d; ++j)
      if (sgn(phi[j]) != 0) raw[i - d + j] -= t * phi[j];
    raw[i] = 0;
  }
  raw.resize(d, Rational(0));
  return raw;
}

/* Data to test membership of Q(zeta_n) elements in Q(zeta_{n/p}) when p
 * divides n exactly once: embedding matrix E and the inverse of a square
 * invertible row-subset of it. */
struct Descent {
  std::vector<std::vector<Rational>> e;    // phi(n) x phi(m)
  std::vector<int> rows;                   // chosen rows, size phi(m)
  std::vector<std::vector<Rational>> inv;  // phi(m) x phi(m)
};

const Descent& descent(long n, long p) {
  static std::map<std::pair<long, long>, Descent> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex());
    auto it = cache.find({n, p});
    if (it != cache.end()) return it->second;
  }
  long m = n / p;
  size_t dn = static_cast<size_t>(euler_phi(n)), dm = static_cast<size_t>(euler_phi(m));
  Descent d;
  d.e.assign(dn, std::vector<Rational>(dm, Rational(0)));
  for (size_t i = 0; i < dm; ++i) {
    std::vector<Rational> raw(static_cast<size_t>(p * i + 1), Rational(0));
    raw[p * i] = 1;
    auto col = reduce(raw, n);
    for (size_t r = 0; r < dn; ++r) d.e[r][i] = col[r];
  }
  // Pick rows greedily by elimination on a working copy.
  std::vector<std::vector<Rational>> basis;  // reduced rows
  std::vector<size_t> pivots;
  for (size_t r = 0; r < dn && d.rows.size() < dm; ++r) {
    std::vector<Rational> v = d.e[r];
    for (size_t k = 0; k < basis.size(); ++k) {
      if (sgn(v[pivots[k]]) == 0) continue;
      Rational t = v[pivots[k]] / basis[k][pivots[k]];
      for (size_t j = 0; j < dm; ++j) v[j] -= t * basis[k][j];
    }
    size_t piv = dm;
    for (size_t j = 0; j < dm; ++j)
      if (sgn(v[j]) != 0) {
        piv = j;
        break;
      }
    if (piv == dm) continue;
    basis.push_back(v);
    pivots.push_back(piv);
    d.rows.push_back(static_cast<int>(r));
  }
  // Invert the square submatrix by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(dm), inv(dm, std::vector<Rational>(dm, Rational(0)));
  for (size_t i = 0; i < dm; ++i) {
    a[i] = d.e[d.rows[i]];
    inv[i][i] = 1;
  }
  for (size_t col = 0; col < dm; ++col) {
    size_t piv = col;
    while (sgn(a[piv][col]) == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (size_t j = 0; j < dm; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t i = 0; i < dm; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      Rational t = a[i][col];
      for (size_t j = 0; j < dm; ++j) {
        a[i][j] -= t * a[col][j];
        inv[i][j] -= t * inv[col][j];
      }
    }
  }
  d.inv = std::move(inv);
  std::lock_guard<std::mutex> lk(cache_mutex());
  return cache.emplace(std::make_pair(n, p), std::move(d)).first->second;
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

const std::vector<Rational>& cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n < 1");
  static std::map<long, std::vector<Rational>> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  QPoly p = QPoly::monomial(Rational(1), static_cast<int>(n)) - QPoly(Rational(1));
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = p / QPoly(cyclotomic_poly(d));
  std::lock_guard<std::mutex> lk(cache_mutex());
  return cache.emplace(n, p.coeffs()).first->second;
}

Cyclo::Cyclo(long n, const std::vector<Rational>& powers) : n_(n) {
  if (n < 1) throw std::invalid_argument("Cyclo: conductor must be positive");
  std::vector<Rational> raw(static_cast<size_t>(n), Rational(0));
  for (size_t i = 0; i < powers.size(); ++i) raw[i % n] += powers[i];
  c_ = reduce(std::move(raw), n);
}

Cyclo Cyclo::zeta(long n, long k) {
  if (n < 1) throw std::invalid_argument("zeta: order must be positive");
  k %= n;
  if (k < 0) k += n;
  long g = std::gcd(k, n);
  long nn = n / g, kk = k / g;
  std::vector<Rational> raw(static_cast<size_t>(kk + 1), Rational(0));
  raw[kk] = 1;
  return Cyclo(nn, raw).minimized();
}

Cyclo Cyclo::from_turn(const Rational& t) {
  Rational f = frac(t);
  return zeta(to_ll(f.get_den()), to_ll(f.get_num()));
}

bool Cyclo::is_zero() const {
  for (auto& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

bool Cyclo::is_rational() const { return minimized().n_ == 1; }

Rational Cyclo::rational_value() const {
  Cyclo m = minimized();
  if (m.n_ != 1) throw std::domain_error("cyclotomic number is not rational");
  return m.c_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

static long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (n_ != o.n_) {
    long l = lcm_l(n_, o.n_);
    Cyclo b = o.embed(l);
    *this = embed(l);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (n_ == 1 && o.n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.n_ == 1) {
    for (auto& a : c_) a *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& a : c_) a *= s;
    return *this;
  }
  long l = lcm_l(n_, o.n_);
  Cyclo a = n_ == l ? *this : embed(l);
  Cyclo b = o.n_ == l ? o : o.embed(l);
  std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (sgn(b.c_[j]) != 0) raw[i + j] += a.c_[i] * b.c_[j];
  }
  n_ = l;
  c_ = reduce(std::move(raw), l);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  long l = lcm_l(a.n_, b.n_);
  return a.embed(l).c_ == b.embed(l).c_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
  Cyclo m = minimized();
  if (m.n_ == 1) return Cyclo(Rational(1) / m.c_[0]);
  auto [g, s, t] = QPoly::ext_gcd(QPoly(m.c_), QPoly(cyclotomic_poly(m.n_)));
  if (g.degree() != 0) throw std::logic_error("cyclotomic inverse: nontrivial gcd");
  return Cyclo(m.n_, s.coeffs());
}

Cyclo Cyclo::conj() const { return galois(n_ - 1); }

Cyclo Cyclo::galois(long k) const {
  if (n_ == 1) return *this;
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Rational> raw(static_cast<size_t>(n_), Rational(0));
  for (size_t j = 0; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) raw[(j * k) % n_] += c_[j];
  Cyclo r;
  r.n_ = n_;
  r.c_ = reduce(std::move(raw), n_);
  return r;
}

Cyclo Cyclo::embed(long m) const {
  if (m % n_) throw std::invalid_argument("embed: target conductor not a multiple");
  if (m == n_) return *this;
  long f = m / n_;
  Cyclo r;
  r.n_ = m;
  if (n_ == 1) {
    r.c_.assign(static_cast<size_t>(euler_phi(m)), Rational(0));
    r.c_[0] = c_[0];
    return r;
  }
  std::vector<Rational> raw(c_.size() * f, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) raw[j * f] = c_[j];
  r.c_ = reduce(std::move(raw), m);
  return r;
}

Cyclo Cyclo::minimized() const {
  Cyclo cur = *this;
  if (cur.is_zero()) return Cyclo();
  bool changed = true;
  while (changed && cur.n_ > 1) {
    changed = false;
    for (long p : prime_factors(cur.n_)) {
      long m = cur.n_ / p;
      if (m % p == 0) {
        bool ok = true;
        for (size_t j = 0; j < cur.c_.size() && ok; ++j)
          if (j % p && sgn(cur.c_[j]) != 0) ok = false;
        if (!ok) continue;
        std::vector<Rational> c(static_cast<size_t>(euler_phi(m)));
        for (size_t i = 0; i < c.size(); ++i) c[i] = cur.c_[i * p];
        cur.n_ = m;
        cur.c_ = std::move(c);
        changed = true;
        break;
      }
      const Descent& d = descent(cur.n_, p);
      size_t dm = d.inv.size();
      std::vector<Rational> c(dm, Rational(0));
      for (size_t i = 0; i < dm; ++i)
        for (size_t j = 0; j < dm; ++j)
          if (sgn(d.inv[i][j]) != 0) c[i] += d.inv[i][j] * cur.c_[d.rows[j]];
      bool ok = true;
      for (size_t r = 0; r < d.e.size() && ok; ++r) {
        Rational s = 0;
        for (size_t j = 0; j < dm; ++j)
          if (sgn(d.e[r][j]) != 0) s += d.e[r][j] * c[j];
        if (s != cur.c_[r]) ok = false;
      }
      if (!ok) continue;
      cur.n_ = m;
      cur.c_ = std::move(c);
      changed = true;
      break;
    }
  }
  return cur;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> r = 0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    double ang = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
    r += c_[j].get_d() * std::polar(1.0, ang);
  }
  return r;
}

std::string Cyclo::to_string() const {
  Cyclo m = minimized();
  if (m.n_ == 1) return m.c_[0].get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t j = 0; j < m.c_.size(); ++j) {
    const Rational& a = m.c_[j];
    if (sgn(a) == 0) continue;
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    first = false;
    Rational ab = abs(a);
    if (j == 0) {
      os << ab.get_str();
      continue;
    }
    if (ab != 1) os << ab.get_str() << "*";
    os << "z" << m.n_;
    if (j > 1) os << "^" << j;
  }
  os << ")";
  return os.str();
}

}  // namespace adjgamma
