#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adjgamma/intmatrix.hpp"
#include "adjgamma/poly.hpp"

namespace adjgamma {

struct CartanComponent {
  char type = 'A';  // A B C D E F G
  int rank = 0;
  int offset = 0;  // index of its first simple root
};

enum class IsogenyKind { Adjoint, SimplyConnected, Explicit };

struct Isogeny {
  IsogenyKind kind = IsogenyKind::Adjoint;
  // Explicit: rows are a basis of X^* of the semisimple part, written in
  // fundamental-weight coordinates; must contain the root lattice.
  IntMat basis;
};

/* Based root datum with X^* = Z^rank. Roots are column vectors in X^*,
 * coroots in X_* with the standard pairing. Positive roots come first:
 * roots[i + num_positive] = -roots[i]. */
struct RootDatum {
  int rank = 0;
  int ss_rank = 0;
  std::vector<CartanComponent> components;
  IntMat cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<IntVec> simple_roots, simple_coroots;
  std::vector<IntVec> roots, coroots;
  std::vector<IntVec> root_coords;  // in the basis of simple roots
  int num_positive = 0;
  std::string label;

  int num_roots() const { return static_cast<int>(roots.size()); }
  int negative_index(int i) const { return i < num_positive ? i + num_positive : i - num_positive; }
  int find_root(const IntVec& x) const;  // -1 if absent
  bool is_semisimple() const { return rank == ss_rank; }
};

/* Finite-order automorphism of a based root datum. theta acts on X^*,
 * theta_dual = theta^{-T} on X_*. perm[i] is the image of simple root i. */
struct Twist {
  IntMat theta, theta_dual;
  std::vector<int> perm;
  int order = 1;
};

struct FiniteAbelianGroupDesc {
  std::vector<long long> invariants;  // nontrivial cyclic factors
  int free_rank = 0;
  long long order() const;  // throws for infinite groups
  std::string to_string() const;
};

// "A2", "B2", "A1xA1", "D4", "T" (rank-0 semisimple part). central_rank adds a torus factor.
RootDatum from_cartan_type(const std::string& type, const Isogeny& iso, int central_rank = 0);
RootDatum dual(const RootDatum& d);
Twist dual(const Twist& t);
Twist identity_twist(const RootDatum& d);
// Twist permuting simple roots; central_twist acts on the central X^* block.
Twist twist_from_diagram(const RootDatum& d, const std::vector<int>& perm, const IntMat& central_twist = {});
// Throws std::invalid_argument when theta does not preserve the based datum.
void validate_twist(const RootDatum& d, const Twist& t);

IntMat simple_reflection(const RootDatum& d, int i);
IntMat reflection(const RootDatum& d, int root_index);

FiniteAbelianGroupDesc fundamental_group_invariants(const RootDatum& d, const Twist& t);
// |Omega_ad^theta| / |Omega^theta| for the semisimple part.
Rational omega_index_ratio(const RootDatum& d, const Twist& t);

// |G(F_q)| as a polynomial in q (integer coefficients).
Poly<Rational> order_polynomial(const RootDatum& d, const Twist& t);
// |T(F_q)| for the maximal torus: det(q - theta) on X^*.
Poly<Rational> iwahori_quotient_order(const RootDatum& d, const Twist& t);
// Per-orbit data used by the order polynomial: q-degrees and epsilon turns.
struct OrderFactor {
  int degree;          // exponent of q
  Rational eps_turn;   // epsilon = exp(2 pi i eps_turn)
};
std::vector<OrderFactor> order_factors(const RootDatum& d, const Twist& t, int& q_power);

// Weyl group as matrices on X^*; throws std::length_error past the bound.
std::vector<IntMat> weyl_elements(const RootDatum& d, size_t bound = 100000);
std::vector<IntMat> fixed_weyl_elements(const RootDatum& d, const Twist& t, size_t bound = 100000);

// Dimension of the fixed space of theta on X^* restricted to the central block.
int central_fixed_dim(const RootDatum& d, const Twist& t);

std::string format_vec(const IntVec& v);

}  // namespace adjgamma
