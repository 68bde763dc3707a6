#pragma once

#include <string>

#include "adjgamma/intmatrix.hpp"
#include "adjgamma/qmonomial.hpp"

namespace adjgamma {

/* Point of a complex torus with cocharacter coordinates: the character x
 * takes the value exp(2 pi i <x, mu>) * q^{<x, nu>}. */
struct TorusPoint {
  RatVec mu, nu;

  TorusPoint() = default;
  TorusPoint(RatVec m, RatVec n);
  static TorusPoint identity(int rank);

  int rank() const { return static_cast<int>(mu.size()); }
  QMonomial value(const IntVec& character) const;
  // Image under the automorphism acting on characters by g (column convention):
  // value of x at the image equals value of g^{-1} x here.
  TorusPoint transformed(const IntMat& g_inverse_on_characters) const;
  TorusPoint conj() const;  // complex conjugate point (mu -> -mu)
  TorusPoint operator*(const TorusPoint& o) const;
  // Fixed by the automorphism acting on cocharacters by m (mu modulo Z^n).
  bool is_fixed_by(const IntMat& m) const;
  bool operator==(const TorusPoint& o) const;
  std::string to_string() const;
};

}  // namespace adjgamma
