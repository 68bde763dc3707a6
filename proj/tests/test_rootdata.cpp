#include <doctest.h>

#include <array>
#include <functional>
#include <set>

#include "adjgamma/rootdata.hpp"
#include "brute_force.hpp"

using namespace brute;

using namespace adjgamma;

static const Isogeny AD{IsogenyKind::Adjoint, {}};
static const Isogeny SC{IsogenyKind::SimplyConnected, {}};

TEST_CASE("root systems have the expected sizes") {
  struct Case {
    const char* type;
    int roots;
    size_t weyl;
  };
  for (auto c : {Case{"A1", 2, 2}, Case{"A2", 6, 6}, Case{"B2", 8, 8}, Case{"G2", 12, 12}, Case{"A1xA1", 4, 4},
                 Case{"D4", 24, 192}, Case{"A3", 12, 24}, Case{"C3", 18, 48}}) {
    for (auto iso : {AD, SC}) {
      RootDatum d = from_cartan_type(c.type, iso);
      CHECK(d.num_roots() == c.roots);
      CHECK(weyl_elements(d).size() == c.weyl);
      for (int i = 0; i < d.num_roots(); ++i) {
        CHECK(dot(d.roots[i], d.coroots[i]) == 2);
        IntMat s = reflection(d, i);
        for (int j = 0; j < d.num_roots(); ++j) CHECK(d.find_root(mat_vec(s, d.roots[j])) >= 0);
      }
    }
  }
  CHECK(from_cartan_type("E6", AD).num_roots() == 72);
  CHECK(from_cartan_type("F4", AD).num_roots() == 48);
}

TEST_CASE("dual datum swaps roots and coroots") {
  for (const char* t : {"B2", "G2", "A2", "C3"}) {
    RootDatum d = from_cartan_type(t, AD);
    RootDatum dd = dual(d);
    std::set<IntVec> a(d.coroots.begin(), d.coroots.end()), b(dd.roots.begin(), dd.roots.end());
    CHECK(a == b);
    RootDatum ddd = dual(dd);
    std::set<IntVec> c(ddd.roots.begin(), ddd.roots.end()), e(d.roots.begin(), d.roots.end());
    CHECK(c == e);
  }
}

TEST_CASE("fundamental group invariants") {
  auto omega = [](const char* type, Isogeny iso, std::vector<int> perm) {
    RootDatum d = from_cartan_type(type, iso);
    Twist t = twist_from_diagram(d, perm);
    return fundamental_group_invariants(d, t).order();
  };
  CHECK(omega("A1", AD, {}) == 2);
  CHECK(omega("A1", SC, {}) == 1);
  CHECK(omega("A2", AD, {}) == 3);
  CHECK(omega("A3", AD, {}) == 4);
  CHECK(omega("B2", AD, {}) == 2);
  CHECK(omega("G2", AD, {}) == 1);
  CHECK(omega("D4", AD, {}) == 4);
  CHECK(omega("A2", AD, {1, 0}) == 1);
  CHECK(omega("A3", AD, {2, 1, 0}) == 2);
  CHECK(omega("D4", AD, {2, 1, 3, 0}) == 1);
  CHECK(omega("A1xA1", AD, {1, 0}) == 2);
  RootDatum d = from_cartan_type("D4", AD);
  CHECK(fundamental_group_invariants(d, identity_twist(d)).invariants == std::vector<long long>{2, 2});
  RootDatum sl2 = from_cartan_type("A1", SC);
  CHECK(omega_index_ratio(sl2, identity_twist(sl2)) == 2);
  RootDatum gl = from_cartan_type("A1", SC, 1);
  auto g = fundamental_group_invariants(gl, identity_twist(gl));
  CHECK(g.free_rank == 1);
}

TEST_CASE("twist validation") {
  RootDatum b2 = from_cartan_type("B2", AD);
  CHECK_THROWS_AS(twist_from_diagram(b2, {1, 0}), std::invalid_argument);
  RootDatum a2 = from_cartan_type("A2", AD);
  CHECK_THROWS_AS(twist_from_diagram(a2, {0, 0}), std::invalid_argument);
  // Explicit basis {2w1 - w2, -w1 + 2w2} is the root lattice; {3w1, w2} does not contain it.
  RootDatum pgl3 = from_cartan_type("A2", Isogeny{IsogenyKind::Explicit, {{2, -1}, {-1, 2}}});
  CHECK(fundamental_group_invariants(pgl3, identity_twist(pgl3)).order() == 3);
  CHECK_THROWS_AS(from_cartan_type("A2", Isogeny{IsogenyKind::Explicit, {{3, 0}, {0, 1}}}), std::invalid_argument);
  RootDatum d4 = from_cartan_type("D4", AD);
  Twist tri = twist_from_diagram(d4, {2, 1, 3, 0});
  CHECK(tri.order == 3);
  CHECK(fixed_weyl_elements(d4, tri).size() == 12);
  RootDatum a3 = from_cartan_type("A3", AD);
  CHECK(fixed_weyl_elements(a3, twist_from_diagram(a3, {2, 1, 0})).size() == 8);
  CHECK_THROWS_AS(twist_from_diagram(from_cartan_type("T", AD, 1), {}, {{2}}), std::invalid_argument);
}

TEST_CASE("order polynomials agree with brute-force counts") {
  RootDatum sl2 = from_cartan_type("A1", SC);
  auto p = order_polynomial(sl2, identity_twist(sl2));
  CHECK(eval_at(p, 2) == brute_sl(2, 2));
  CHECK(eval_at(p, 3) == brute_sl(2, 3));
  CHECK(eval_at(p, 2) == 6);
  CHECK(eval_at(p, 3) == 24);
  RootDatum sl3 = from_cartan_type("A2", SC);
  CHECK(eval_at(order_polynomial(sl3, identity_twist(sl3)), 2) == brute_sl(3, 2));
  CHECK(eval_at(order_polynomial(sl3, identity_twist(sl3)), 3) == brute_sl(3, 3));
  Twist flip = twist_from_diagram(sl3, {1, 0});
  CHECK(eval_at(order_polynomial(sl3, flip), 2) == brute_su3_2());
  RootDatum sp4 = from_cartan_type("C2", SC);
  CHECK(eval_at(order_polynomial(sp4, identity_twist(sp4)), 2) == brute_sp4_2());
  RootDatum gl2 = from_cartan_type("A1", SC, 1);
  CHECK(eval_at(order_polynomial(gl2, identity_twist(gl2)), 2) == brute_gl(2, 2));
  CHECK(eval_at(order_polynomial(gl2, identity_twist(gl2)), 3) == brute_gl(2, 3));
  RootDatum u1 = from_cartan_type("T", AD, 1);
  Twist neg = twist_from_diagram(u1, {}, {{-1}});
  for (int q : {3, 5, 7}) CHECK(eval_at(order_polynomial(u1, neg), q) == brute_norm_one(q));
  RootDatum d4 = from_cartan_type("D4", AD);
  CHECK(eval_at(order_polynomial(d4, twist_from_diagram(d4, {2, 1, 3, 0})), 2) == 211341312LL);
  CHECK(eval_at(order_polynomial(sl2, identity_twist(sl2)), 5) == 120);
  // Isogenous groups share the order polynomial.
  RootDatum pgl3 = from_cartan_type("A2", AD);
  CHECK(order_polynomial(pgl3, identity_twist(pgl3)) == order_polynomial(sl3, identity_twist(sl3)));
}

TEST_CASE("iwahori quotient order is the torus order") {
  RootDatum a1 = from_cartan_type("A1", AD);
  auto t = iwahori_quotient_order(a1, identity_twist(a1));
  CHECK(t == Poly<Rational>(std::vector<Rational>{Rational(-1), Rational(1)}));
  RootDatum a2 = from_cartan_type("A2", AD);
  auto tt = iwahori_quotient_order(a2, twist_from_diagram(a2, {1, 0}));
  CHECK(eval_at(tt, 2) == 3);  // q^2 - 1
}
