#include "adjgamma/qratfun.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adjgamma {

namespace {

long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }

WPoly minimize_coeffs(const WPoly& p) {
  return p.map<Cyclo>([](const Cyclo& c) { return c.minimized(); });
}

// gcd of M and every exponent carrying a nonzero coefficient.
long exponent_gcd(const WPoly& p, long g) {
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeffs()[i].is_zero()) g = std::gcd(g, static_cast<long>(i));
  return g;
}

std::string exponent_string(const Rational& e) {
  if (e == 1) return "q";
  std::string s = e.get_str();
  return "q^{" + s + "}";
}

std::string poly_string(const WPoly& p, long m) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Cyclo& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    Rational e = rat(i, m);
    bool rational = c.is_rational();
    Rational cv = rational ? c.rational_value() : Rational(0);
    std::string body;
    if (rational) {
      bool neg = sgn(cv) < 0;
      Rational a = abs(cv);
      if (i == 0) body = a.get_str();
      else if (a == 1) body = exponent_string(e);
      else body = a.get_str() + "*" + exponent_string(e);
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
    } else {
      body = c.to_string();
      if (i != 0) body += "*" + exponent_string(e);
      if (!first) os << " + ";
    }
    os << body;
    first = false;
  }
  return os.str();
}

}  // namespace

QRatFun::QRatFun(WPoly num, WPoly den, long m) : m_(m) {
  if (m < 1) throw std::invalid_argument("QRatFun: M must be positive");
  if (den.zero()) throw std::domain_error("QRatFun: zero denominator");
  if (num.zero()) {
    *this = QRatFun();
    return;
  }
  WPoly g = WPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  Cyclo inv = den.leading().inverse();
  num_ = minimize_coeffs(num.scaled(inv));
  den_ = minimize_coeffs(den.scaled(inv));
  *this = with_minimal_M();
}

QRatFun QRatFun::from_canonical(WPoly num, WPoly den, long m) {
  QRatFun r;
  if (num.zero()) return r;
  r.m_ = m;
  r.num_ = minimize_coeffs(num);
  r.den_ = minimize_coeffs(den);
  return r.with_minimal_M();
}

QRatFun QRatFun::q_power(const Rational& e) {
  long m = to_ll(e.get_den());
  long k = to_ll(e.get_num());
  if (k >= 0) return from_canonical(WPoly::monomial(Cyclo(1), static_cast<int>(k)), WPoly(Cyclo(1)), m);
  return from_canonical(WPoly(Cyclo(1)), WPoly::monomial(Cyclo(1), static_cast<int>(-k)), m);
}

Cyclo QRatFun::constant_value() const {
  if (!is_constant()) throw std::domain_error("QRatFun is not constant");
  return num_.zero() ? Cyclo(0) : num_.coeffs()[0];
}

QRatFun QRatFun::operator-() const {
  QRatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

QRatFun QRatFun::rescaled(long k) const {
  QRatFun r = *this;
  r.m_ = m_ * k;
  r.num_ = num_.inflated(static_cast<int>(k));
  r.den_ = den_.inflated(static_cast<int>(k));
  return r;
}

QRatFun QRatFun::with_minimal_M() const {
  if (num_.zero()) return QRatFun();
  long g = exponent_gcd(den_, exponent_gcd(num_, m_));
  if (g == 1) return *this;
  QRatFun r;
  r.m_ = m_ / g;
  r.num_ = num_.deflated(static_cast<int>(g));
  r.den_ = den_.deflated(static_cast<int>(g));
  return r;
}

static std::pair<QRatFun, QRatFun> common(const QRatFun& a, const QRatFun& b) {
  long l = lcm_l(a.M(), b.M());
  return {a.rescaled(l / a.M()), b.rescaled(l / b.M())};
}

QRatFun operator+(const QRatFun& a, const QRatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto [x, y] = common(a, b);
  if (x.den_ == y.den_) return QRatFun(x.num_ + y.num_, x.den_, x.m_);
  return QRatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, x.m_);
}

QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }

QRatFun operator*(const QRatFun& a, const QRatFun& b) {
  if (a.is_zero() || b.is_zero()) return QRatFun();
  if (a.is_constant()) return b.times_scalar(a.constant_value());
  if (b.is_constant()) return a.times_scalar(b.constant_value());
  auto [x, y] = common(a, b);
  WPoly g1 = WPoly::gcd(x.num_, y.den_);
  WPoly g2 = WPoly::gcd(y.num_, x.den_);
  WPoly n1 = g1.degree() > 0 ? x.num_ / g1 : x.num_;
  WPoly d2 = g1.degree() > 0 ? y.den_ / g1 : y.den_;
  WPoly n2 = g2.degree() > 0 ? y.num_ / g2 : y.num_;
  WPoly d1 = g2.degree() > 0 ? x.den_ / g2 : x.den_;
  return QRatFun::from_canonical(n1 * n2, d1 * d2, x.m_);
}

QRatFun operator/(const QRatFun& a, const QRatFun& b) {
  if (b.is_zero()) throw std::domain_error("QRatFun division by zero");
  Cyclo inv = b.num_.leading().inverse();
  QRatFun binv = QRatFun::from_canonical(b.den_.scaled(inv), b.num_.scaled(inv), b.m_);
  return a * binv;
}

bool operator==(const QRatFun& a, const QRatFun& b) {
  if (a.m_ == b.m_) return a.num_ == b.num_ && a.den_ == b.den_;
  auto [x, y] = common(a, b);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

QRatFun QRatFun::pow(long k) const {
  if (k < 0) return (QRatFun(1) / *this).pow(-k);
  QRatFun r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

QRatFun QRatFun::times_scalar(const Cyclo& c) const {
  if (c.is_zero() || is_zero()) return QRatFun();
  QRatFun r = *this;
  r.num_ = minimize_coeffs(num_.scaled(c));
  return r;
}

QRatFun QRatFun::times_q_power(const Rational& e) const {
  if (is_zero() || sgn(e) == 0) return *this;
  long l = lcm_l(m_, to_ll(e.get_den()));
  QRatFun x = rescaled(l / m_);
  Rational ke = e * l;
  long k = to_ll(ke.get_num());
  if (k > 0) {
    long t = std::min<long>(k, x.den_.valuation());
    x.den_ = x.den_.shifted(static_cast<int>(-t));
    x.num_ = x.num_.shifted(static_cast<int>(k - t));
  } else {
    k = -k;
    long t = std::min<long>(k, x.num_.valuation());
    x.num_ = x.num_.shifted(static_cast<int>(-t));
    x.den_ = x.den_.shifted(static_cast<int>(k - t));
  }
  return x.with_minimal_M();
}

QRatFun QRatFun::conj() const {
  QRatFun r = *this;
  r.num_ = num_.map<Cyclo>([](const Cyclo& c) { return c.conj(); });
  r.den_ = den_.map<Cyclo>([](const Cyclo& c) { return c.conj(); });
  return r;
}

std::complex<double> QRatFun::eval_numeric(const Rational& q0) const { return eval_numeric(q0.get_d()); }

std::complex<double> QRatFun::eval_numeric(double q0) const {
  if (!(q0 > 0)) throw std::domain_error("eval_numeric: q0 must be positive");
  double w = std::pow(q0, 1.0 / static_cast<double>(m_));
  auto ev = [w](const WPoly& p, double& scale) {
    std::complex<double> r = 0;
    double wp = 1;
    scale = 0;
    for (int i = 0; i <= p.degree(); ++i) {
      auto c = p.coeffs()[i].to_complex();
      r += c * wp;
      scale += std::abs(c) * wp;
      wp *= w;
    }
    return r;
  };
  double sn, sd;
  auto n = ev(num_, sn);
  auto d = ev(den_, sd);
  if (std::abs(d) <= 1e-12 * sd) throw std::domain_error("eval_numeric: pole at q0");
  return n / d;
}

Cyclo QRatFun::eval_at_q_one() const {
  Cyclo d = den_.eval_at_one();
  if (d.is_zero()) throw std::domain_error("pole at q = 1");
  return (num_.eval_at_one() / d).minimized();
}

std::optional<Cyclo> QRatFun::proportionality(const QRatFun& a, const QRatFun& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Cyclo(0);
  auto [x, y] = common(a, b);
  if (x.den_ != y.den_ || x.num_.degree() != y.num_.degree()) return std::nullopt;
  Cyclo c = (x.num_.leading() / y.num_.leading()).minimized();
  if (y.num_.scaled(c) != x.num_) return std::nullopt;
  return c;
}

std::string QRatFun::to_string() const {
  std::string n = poly_string(num_, m_);
  if (den_.degree() == 0) return n;
  std::string d = poly_string(den_, m_);
  bool single_n = num_.degree() == num_.valuation() && num_.coeffs().back().is_rational();
  bool single_d = den_.degree() == den_.valuation();
  return (single_n ? n : "(" + n + ")") + "/" + (single_d ? d : "(" + d + ")");
}

// ---- QMonomial ----

std::vector<QMonomial> QMonomial::roots(long m) const {
  std::vector<QMonomial> r;
  r.reserve(m);
  for (long j = 0; j < m; ++j) r.emplace_back((turn + j) / m, qexp / m);
  return r;
}

QRatFun QMonomial::to_qratfun() const { return QRatFun::q_power(qexp).times_scalar(unit()); }

std::string QMonomial::to_string() const {
  std::string s;
  if (sgn(turn) != 0) {
    if (turn == Rational(1, 2)) s = "-1";
    else s = "z" + turn.get_den().get_str() + (turn.get_num() == 1 ? "" : "^" + turn.get_num().get_str());
  }
  if (sgn(qexp) != 0) {
    if (!s.empty()) s += "*";
    s += exponent_string(qexp);
  }
  return s.empty() ? "1" : s;
}

// ---- FactoredValue ----

FactoredValue& FactoredValue::times_scalar(const Cyclo& c) {
  scalar_ *= c;
  return *this;
}

FactoredValue& FactoredValue::times_q_power(const Rational& e) {
  qexp_ += e;
  return *this;
}

FactoredValue& FactoredValue::times_monomial(const QMonomial& m) {
  scalar_ *= m.unit();
  qexp_ += m.qexp;
  return *this;
}

FactoredValue& FactoredValue::times_one_minus(const QMonomial& m, int power) {
  if (power == 0) return *this;
  if (sgn(m.qexp) == 0) {
    Cyclo c = Cyclo(1) - m.unit();
    if (c.is_zero()) {
      if (power < 0) throw std::domain_error("FactoredValue: division by zero factor");
      scalar_ = Cyclo(0);
      return *this;
    }
    Cyclo p = power > 0 ? c : c.inverse();
    for (int i = 0; i < std::abs(power); ++i) scalar_ *= p;
    return *this;
  }
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (it->first == m) {
      it->second += power;
      if (it->second == 0) factors_.erase(it);
      return *this;
    }
  }
  factors_.emplace_back(m, power);
  return *this;
}

FactoredValue& FactoredValue::times_one_plus(const QMonomial& m, int power) {
  return times_one_minus(m * QMonomial(Rational(1, 2), Rational(0)), power);
}

FactoredValue& FactoredValue::operator*=(const FactoredValue& o) {
  scalar_ *= o.scalar_;
  qexp_ += o.qexp_;
  for (auto& [m, p] : o.factors_) times_one_minus(m, p);
  return *this;
}

FactoredValue FactoredValue::inverse() const {
  if (scalar_.is_zero()) throw std::domain_error("FactoredValue: inverse of zero");
  FactoredValue r;
  r.scalar_ = scalar_.inverse();
  r.qexp_ = -qexp_;
  for (auto& [m, p] : factors_) r.factors_.emplace_back(m, -p);
  return r;
}

QRatFun FactoredValue::to_qratfun() const {
  if (scalar_.is_zero()) return QRatFun();
  long m = to_ll(qexp_.get_den());
  for (auto& [f, p] : factors_) m = lcm_l(m, to_ll(f.qexp.get_den()));
  Cyclo scalar = scalar_;
  long shift = to_ll(Rational(qexp_ * m).get_num());
  std::vector<WPoly> nums, dens;
  for (auto& [f, p] : factors_) {
    long k = to_ll(Rational(f.qexp * m).get_num());
    Cyclo z = f.unit();
    WPoly poly;
    if (k > 0) {
      // 1 - z w^k = -z (w^k - z^{-1})
      Cyclo mz = -z;
      for (int i = 0; i < std::abs(p); ++i) scalar = p > 0 ? scalar * mz : scalar / mz;
      poly = WPoly::monomial(Cyclo(1), static_cast<int>(k)) - WPoly(z.inverse());
    } else {
      // 1 - z w^{-k'} = (w^{k'} - z) w^{-k'}
      long kk = -k;
      shift -= kk * p;
      poly = WPoly::monomial(Cyclo(1), static_cast<int>(kk)) - WPoly(z);
    }
    auto& dst = p > 0 ? nums : dens;
    for (int i = 0; i < std::abs(p); ++i) dst.push_back(poly);
  }
  for (auto& a : nums) {
    for (auto& b : dens) {
      if (a.degree() == 0) break;
      if (b.degree() == 0) continue;
      if (a == b) {
        a = WPoly(Cyclo(1));
        b = WPoly(Cyclo(1));
        continue;
      }
      WPoly g = WPoly::gcd(a, b);
      if (g.degree() > 0) {
        a = a / g;
        b = b / g;
      }
    }
  }
  WPoly n(scalar), d(Cyclo(1));
  for (auto& a : nums)
    if (a.degree() > 0) n = n * a;
  for (auto& b : dens)
    if (b.degree() > 0) d = d * b;
  if (shift > 0) n = n.shifted(static_cast<int>(shift));
  if (shift < 0) d = d.shifted(static_cast<int>(-shift));
  return QRatFun::from_canonical(std::move(n), std::move(d), m);
}

}  // namespace adjgamma
