#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "adjgamma/json_io.hpp"
#include "adjgamma/qratfun.hpp"
#include "adjgamma/uratfun.hpp"

using namespace adjgamma;
using cd = std::complex<double>;

static bool close(cd a, cd b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

static cd root(long n, long k) { return std::polar(1.0, 2 * std::numbers::pi * k / n); }

static Cyclo random_cyclo(std::mt19937& rng, long n) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c(n);
  for (auto& x : c) x = rat(d(rng), 1 + (d(rng) + 4) % 3);
  return Cyclo(n, c);
}

TEST_CASE("cyclotomic polynomials vanish at primitive roots") {
  for (long n = 1; n <= 40; ++n) {
    const auto& p = cyclotomic_poly(n);
    CHECK(static_cast<long>(p.size()) - 1 == euler_phi(n));
    cd z = root(n, 1), v = 0, zp = 1;
    for (auto& c : p) {
      v += c.get_d() * zp;
      zp *= z;
    }
    CHECK(std::abs(v) < 1e-8);
  }
}

TEST_CASE("cyclotomic arithmetic agrees with complex evaluation") {
  std::mt19937 rng(7);
  for (long n : {3L, 4L, 5L, 8L, 9L, 12L, 15L, 20L}) {
    for (int t = 0; t < 6; ++t) {
      Cyclo a = random_cyclo(rng, n), b = random_cyclo(rng, n % 4 == 0 ? 6 : 4);
      CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
      CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
      CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
      if (!b.is_zero()) {
        CHECK(close((a / b).to_complex(), a.to_complex() / b.to_complex()));
        CHECK((a / b) * b == a);
      }
      CHECK(a.minimized() == a);
      CHECK(close(a.minimized().to_complex(), a.to_complex()));
    }
  }
}

TEST_CASE("conductor minimization") {
  CHECK(Cyclo::zeta(6, 3) == Cyclo(-1));
  CHECK(Cyclo::zeta(6, 3).conductor() == 1);
  CHECK((Cyclo::zeta(4) + Cyclo::zeta(4, 3)).is_zero());
  Cyclo s5 = 0;
  for (int k = 0; k < 5; ++k) s5 += Cyclo::zeta(5, k);
  CHECK(s5.is_zero());
  Cyclo s = Cyclo::zeta(5, 1) + Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3) + Cyclo::zeta(5, 4);
  CHECK(s.is_rational());
  CHECK(s.rational_value() == -1);
  Cyclo r2 = Cyclo::zeta(8) + Cyclo::zeta(8, 7);
  CHECK(r2.minimized().conductor() == 8);
  CHECK(r2 * r2 == Cyclo(2));
  Cyclo r3 = Cyclo::zeta(12) + Cyclo::zeta(12, 11);
  CHECK(r3 * r3 == Cyclo(3));
  CHECK(r3.minimized().conductor() == 12);
  Cyclo w = Cyclo::zeta(3);
  CHECK(w.embed(15).minimized() == w);
  CHECK(w.embed(15).minimized().conductor() == 3);
  CHECK(Cyclo::zeta(10, 1).minimized().conductor() == 5);
  CHECK(Cyclo::from_turn(Rational(-1, 4)) == Cyclo::zeta(4, 3));
  CHECK(close(Cyclo::zeta(7, 3).galois(2).to_complex(), root(7, 6)));
}

TEST_CASE("QRatFun canonical forms") {
  QRatFun q = QRatFun::q();
  QRatFun h = QRatFun::q_power(Rational(1, 2));
  QRatFun a = (q - QRatFun(1)) / (h - QRatFun(1));
  CHECK(a == h + QRatFun(1));
  CHECK(a.M() == 2);
  CHECK(a.den().degree() == 0);
  QRatFun b = (q * q - QRatFun(1)) / (q - QRatFun(1));
  CHECK(b == q + QRatFun(1));
  CHECK(b.M() == 1);
  CHECK(h.rescaled(3) == h);
  CHECK(h.rescaled(3).M() == 6);
  CHECK(h.rescaled(3).with_minimal_M().M() == 2);
  QRatFun pinned = h / (q + QRatFun(1));
  CHECK(pinned.to_string() == "q^{1/2}/(q + 1)");
  CHECK(close(pinned.eval_numeric(Rational(4)), cd(2.0 / 5.0)));
  CHECK(pinned.eval_at_q_one() == Cyclo(Rational(1, 2)));
  CHECK_THROWS_AS((QRatFun(1) / (q - QRatFun(1))).eval_at_q_one(), std::domain_error);
  CHECK(pinned.times_q_power(Rational(-1, 2)) == QRatFun(1) / (q + QRatFun(1)));
  CHECK(pinned.times_q_power(Rational(3, 2)) == q * q / (q + QRatFun(1)));
  auto c = QRatFun::proportionality(-pinned, pinned);
  REQUIRE(c.has_value());
  CHECK(*c == Cyclo(-1));
  CHECK(!QRatFun::proportionality(q, pinned).has_value());
}

TEST_CASE("QRatFun conjugation and numeric oracle") {
  QRatFun z(Cyclo::zeta(3));
  QRatFun f = (QRatFun(1) - z * QRatFun::q_power(Rational(1, 3))) / (QRatFun(1) + QRatFun::q());
  for (double q0 : {2.0, 3.0, 7.5}) {
    cd w = std::pow(q0, 1.0 / 3.0);
    cd expect = (1.0 - root(3, 1) * w) / (1.0 + q0);
    CHECK(close(f.eval_numeric(q0), expect));
    CHECK(close(f.conj().eval_numeric(q0), std::conj(expect)));
  }
}

TEST_CASE("FactoredValue matches direct products") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> turn(0, 5), ex(-4, 4), pw(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    FactoredValue fv(Cyclo(Rational(3, 2)));
    QRatFun direct(Rational(3, 2));
    fv.times_q_power(Rational(1, 2));
    direct = direct.times_q_power(Rational(1, 2));
    for (int k = 0; k < 5; ++k) {
      QMonomial m(rat(turn(rng), 6), rat(ex(rng), 2));
      int p = pw(rng);
      if (m.is_one() || p == 0) continue;
      QRatFun lin = QRatFun(1) - m.to_qratfun();
      fv.times_one_minus(m, p);
      direct *= lin.pow(p);
    }
    CHECK(fv.to_qratfun() == direct);
  }
}

TEST_CASE("limit at u = 1") {
  UPoly one_minus_u(std::vector<QRatFun>{QRatFun(1), QRatFun(-1)});
  UPoly one_minus_u2(std::vector<QRatFun>{QRatFun(1), QRatFun(0), QRatFun(-1)});
  URatFun f(one_minus_u, one_minus_u2);
  auto l = f.limit_at_u_one();
  CHECK(l.order == 0);
  CHECK(l.leading == QRatFun(Rational(1, 2)));
  URatFun g(one_minus_u * one_minus_u, one_minus_u2);
  auto lg = g.limit_at_u_one();
  CHECK(lg.order == 1);
  CHECK(lg.leading == QRatFun(Rational(-1, 2)));
  auto lp = (URatFun(QRatFun(1)) / g).limit_at_u_one();
  CHECK(lp.order == -1);
  // (1 - u q^{-1}) / (u - q^{-1}) at u = 1 is 1
  QRatFun qi = QRatFun::q_power(Rational(-1));
  URatFun h(UPoly(std::vector<QRatFun>{QRatFun(1), -qi}), UPoly(std::vector<QRatFun>{-qi, QRatFun(1)}));
  auto lh = h.limit_at_u_one();
  CHECK(lh.order == 0);
  CHECK(lh.leading == QRatFun(1));
  cd u0(0.3, 0.2);
  CHECK(close(h.eval_numeric(3.0, u0), (1.0 - u0 / 3.0) / (u0 - 1.0 / 3.0)));
}

TEST_CASE("json round trip") {
  QRatFun f = QRatFun(Cyclo::zeta(5, 2)) * QRatFun::q_power(Rational(1, 2)) / (QRatFun::q() + QRatFun(1));
  json j = qratfun_to_json(f);
  CHECK(qratfun_from_json(j) == f);
  CHECK(j["M"] == 2);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(qratfun_from_json(json{{"M", 1}, {"num", json::array()}, {"den", json::array()}}), std::domain_error);
}
