#include <doctest.h>

#include <algorithm>
#include <random>

#include "adjgamma/restricted.hpp"

using namespace adjgamma;

static const Isogeny AD{IsogenyKind::Adjoint, {}};

static RestrictedRootSystem make(const char* type, std::vector<int> perm) {
  RootDatum d = from_cartan_type(type, AD);
  return restrict(d, twist_from_diagram(d, perm));
}

static TorusPoint random_point(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> a(-6, 6);
  RatVec mu(rank), nu(rank);
  for (int i = 0; i < rank; ++i) {
    mu[i] = rat(a(rng), 7);
    nu[i] = rat(a(rng), 3);
  }
  return TorusPoint(mu, nu);
}

TEST_CASE("restricted systems of the twisted built-ins") {
  auto a2 = make("A2", {1, 0});
  CHECK(a2.classes.size() == 2);
  CHECK(a2.classes[0].type == ClassType::II);
  CHECK(a2.classes[0].size == 3);
  CHECK(a2.classes[0].m_plus == 2);
  CHECK(a2.classes[0].m_minus == 1);
  CHECK(a2.classes[0].f == 4);
  CHECK(a2.classes[0].class_sum == scale(a2.classes[0].gamma, 2));
  CHECK(a2.simple_classes.size() == 1);

  auto swap = make("A1xA1", {1, 0});
  CHECK(swap.classes.size() == 2);
  CHECK(swap.classes[0].type == ClassType::I);
  CHECK(swap.classes[0].m_plus == 2);

  auto a3 = make("A3", {2, 1, 0});
  CHECK(a3.num_positive_classes() == 4);
  CHECK(a3.simple_classes.size() == 2);
  for (auto& c : a3.classes) CHECK(c.type == ClassType::I);

  auto d4 = make("D4", {2, 1, 3, 0});
  CHECK(d4.num_positive_classes() == 6);
  std::vector<int> sizes;
  for (int k = 0; k < 6; ++k) sizes.push_back(d4.classes[k].size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 1, 1, 3, 3, 3});

  auto a4 = make("A4", {3, 2, 1, 0});
  int type2 = 0;
  for (int k = 0; k < a4.num_positive_classes(); ++k)
    if (a4.classes[k].type == ClassType::II) ++type2;
  CHECK(a4.num_positive_classes() == 4);
  CHECK(type2 == 2);

  auto split = make("G2", {});
  CHECK(split.classes.size() == 12);
  for (auto& c : split.classes) {
    CHECK(c.size == 1);
    CHECK(c.m_plus == 1);
  }
}

// The characters gamma_a form a reduced root system for the invariant form.
TEST_CASE("restricted classes satisfy the root system axioms") {
  for (auto [type, perm] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"A2", {1, 0}}, {"A3", {2, 1, 0}}, {"A4", {3, 2, 1, 0}}, {"D4", {2, 1, 3, 0}}, {"D4", {0, 1, 3, 2}},
           {"A1xA1", {1, 0}}, {"B2", {}}, {"G2", {}}, {"A2xA2", {2, 3, 0, 1}}, {"E6", {5, 1, 4, 3, 2, 0}}}) {
    CAPTURE(type);
    auto rs = make(type, perm);
    const auto& d = rs.datum;
    std::vector<RatVec> g;
    for (auto& c : rs.classes) g.push_back(to_rat(c.gamma));
    int total = 0;
    for (auto& c : rs.classes) total += c.size;
    CHECK(total == d.num_roots());
    for (size_t i = 0; i < g.size(); ++i) {
      CHECK(mat_vec(rs.twist.theta, rs.classes[i].gamma) == rs.classes[i].gamma);
      Rational gg = invariant_form(d, g[i], g[i]);
      for (size_t j = 0; j < g.size(); ++j) {
        Rational c = 2 * invariant_form(d, g[j], g[i]) / gg;
        CHECK(c.get_den() == 1);
        RatVec s = g[j];
        for (size_t k = 0; k < s.size(); ++k) s[k] -= c * g[i][k];
        CHECK(std::find(g.begin(), g.end(), s) != g.end());
        if (i != j) {
          // reduced: no proportional pair except +-
          RatVec two = g[i];
          for (auto& x : two) x *= 2;
          CHECK(g[j] != two);
        }
      }
    }
  }
}

// Oracle: on each theta-orbit O the operator (r theta)^{|O|} acts on a root
// space by the product of the orbit's roots, times -1 exactly on the orbit of
// sums alpha + theta(alpha) (pinned automorphism of A_2n).
TEST_CASE("class eigenvalues match the orbit-wise computation") {
  std::mt19937 rng(3);
  for (auto [type, perm] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"A2", {1, 0}}, {"A4", {3, 2, 1, 0}}, {"D4", {2, 1, 3, 0}}, {"A1xA1", {1, 0}}, {"A3", {2, 1, 0}}}) {
    CAPTURE(type);
    auto rs = make(type, perm);
    for (int trial = 0; trial < 4; ++trial) {
      TorusPoint r = random_point(rng, rs.datum.rank);
      for (size_t a = 0; a < rs.classes.size(); ++a) {
        auto ev = class_eigenvalues(rs, static_cast<int>(a), r);
        std::vector<QMonomial> oracle;
        const auto& c = rs.classes[a];
        for (size_t o = 0; o < c.orbits.size(); ++o) {
          QMonomial prod;
          for (int b : c.orbits[o]) prod = prod * r.value(rs.datum.roots[b]);
          if (c.type == ClassType::II && o == 1) prod = prod * QMonomial(Rational(1, 2), Rational(0));
          for (auto& x : prod.roots(static_cast<long>(c.orbits[o].size()))) oracle.push_back(x);
        }
        std::sort(ev.begin(), ev.end());
        std::sort(oracle.begin(), oracle.end());
        CHECK(ev == oracle);
      }
    }
  }
}

TEST_CASE("levi subsystems") {
  auto rs = make("A3", {2, 1, 0});
  CHECK(levi_subsystem(rs, {}).empty());
  CHECK(levi_subsystem(rs, {0}).size() == 2);
  CHECK(levi_subsystem(rs, {1}).size() == 2);
  CHECK(levi_subsystem(rs, {0, 1}).size() == rs.classes.size());
  auto b2 = make("B2", {});
  CHECK(levi_subsystem(b2, {0}).size() == 2);
}

TEST_CASE("char factor has the eigenvalues as inverse roots") {
  auto rs = make("A2", {1, 0});
  TorusPoint r(RatVec{0, 0}, RatVec{1, 1});
  UPoly p = char_factor(rs, 0, r);
  CHECK(p.degree() == 3);
  // gamma(r) = q^2: (1 + X q^2)(1 - X^2 q^2)
  UPoly expect = UPoly(std::vector<QRatFun>{QRatFun(1), QRatFun::q_power(2)}) *
                 UPoly(std::vector<QRatFun>{QRatFun(1), QRatFun(0), -QRatFun::q_power(2)});
  CHECK(p == expect);
}
