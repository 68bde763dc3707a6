#pragma once

#include <vector>

#include "adjgamma/rootdata.hpp"
#include "adjgamma/torus.hpp"
#include "adjgamma/uratfun.hpp"

namespace adjgamma {

enum class ClassType { I, II };

/* A class a in Phi/theta: theta-orbits of roots whose restrictions to the
 * theta-fixed subspace are positive multiples of each other. */
struct RestrictedClass {
  std::vector<int> roots;                // indices into the datum's roots
  std::vector<std::vector<int>> orbits;  // orbit with the smallest restriction first
  ClassType type = ClassType::I;
  IntVec gamma;      // theta-invariant character controlling Ad(r theta) on the class
  IntVec class_sum;  // sum of all roots in the class
  RatVec kac_root;   // restriction of a root in the first orbit
  int size = 0;      // |a|
  Rational m_plus, m_minus;
  Rational f;        // gamma_a = f * kac_root with class_sum normalization
  bool positive = false;
  int opposite = -1;              // index of -a
  std::vector<int> simple_roots;  // simple roots contained in the class
};

struct RestrictedRootSystem {
  RootDatum datum;
  Twist twist;
  std::vector<RestrictedClass> classes;
  std::vector<int> root_class;      // root index -> class index
  std::vector<int> simple_classes;  // classes containing simple roots, ordered by first simple root
  int fixed_dim = 0;                // dim of theta-fixed subspace of X^* (x) Q

  int num_positive_classes() const;
  // Index in simple_classes of the class containing simple root i.
  int simple_class_of_node(int i) const;
};

RestrictedRootSystem restrict(const RootDatum& d, const Twist& t);

// Theta-invariant symmetric form sum_alpha <x, alpha^vee><y, alpha^vee>.
Rational invariant_form(const RootDatum& d, const RatVec& x, const RatVec& y);

// Eigenvalues of Ad(r theta) on the root spaces of class a.
std::vector<QMonomial> class_eigenvalues(const RestrictedRootSystem& rs, int a, const TorusPoint& r);
// det(1 - X Ad(r theta)) on the class, as a polynomial in X.
UPoly char_factor(const RestrictedRootSystem& rs, int a, const TorusPoint& r);

// Classes whose roots lie in the Levi spanned by the given simple classes.
std::vector<int> levi_subsystem(const RestrictedRootSystem& rs, const std::vector<int>& simple_class_subset);

}  // namespace adjgamma
