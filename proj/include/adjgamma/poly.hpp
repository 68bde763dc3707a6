#pragma once

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "adjgamma/rational.hpp"

namespace adjgamma {

// Dense univariate polynomial over a field F, coefficients by increasing degree.
// F needs +, -, *, /, unary -, construction from int and a visible is_zero(const F&).
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F c) {
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static Poly monomial(F c, int deg) {
    if (is_zero(c)) return Poly();
    std::vector<F> v(deg + 1, F(0));
    v[deg] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  // Index of the lowest nonzero coefficient (valuation at 0).
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly scaled(const F& s) const {
    if (is_zero(s)) return Poly();
    Poly r = *this;
    for (auto& a : r.c_) a = a * s;
    return r;
  }
  Poly shifted(int k) const {
    if (zero() || k == 0) return *this;
    if (k < 0) {
      if (valuation() < -k) throw std::domain_error("negative shift drops terms");
      return Poly(std::vector<F>(c_.begin() - k, c_.end()));
    }
    std::vector<F> v(k, F(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }
  // p(x) -> p(x^k)
  Poly inflated(int k) const {
    if (zero() || k == 1) return *this;
    std::vector<F> v(static_cast<size_t>(degree()) * k + 1, F(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(std::move(v));
  }
  // p(x^{1/k}); requires all exponents divisible by k
  Poly deflated(int k) const {
    if (zero() || k == 1) return *this;
    std::vector<F> v(degree() / k + 1, F(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      if (i % k) throw std::domain_error("deflate: exponent not divisible");
      v[i / k] = c_[i];
    }
    return Poly(std::move(v));
  }
  Poly monic() const {
    if (zero()) return Poly();
    F inv = F(1) / leading();
    return scaled(inv);
  }
  template <class X>
  X eval(const X& x) const {
    X r = X(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + X(c_[i]);
    return r;
  }
  F eval_at_one() const {
    F r = F(0);
    for (auto& a : c_) r = r + a;
    return r;
  }
  template <class G, class Fn>
  Poly<G> map(Fn f) const {
    std::vector<G> v;
    v.reserve(c_.size());
    for (auto& a : c_) v.push_back(f(a));
    return Poly<G>(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<F> r = a.c_;
    std::vector<F> q(a.degree() - b.degree() + 1, F(0));
    F inv = F(1) / b.leading();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      if (is_zero(r[i])) continue;
      F t = r[i] * inv;
      q[i - db] = t;
      for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b.c_[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b) {
    while (!b.zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }
  // Returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<Poly, Poly, Poly> ext_gcd(Poly a, Poly b) {
    Poly s0(F(1)), s1, t0, t1(F(1));
    while (!b.zero()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      Poly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      Poly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (a.zero()) return {a, s0, t0};
    F inv = F(1) / a.leading();
    return {a.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.zero();
}

}  // namespace adjgamma
