#pragma once

#include <vector>

#include "adjgamma/poly.hpp"
#include "adjgamma/rational.hpp"

namespace adjgamma {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major; matrices act on column vectors
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

IntMat identity_matrix(int n);
IntMat zero_matrix(int rows, int cols);
IntMat transpose(const IntMat& a);
IntMat matmul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& x);
RatVec mat_vec(const IntMat& a, const RatVec& x);
long long dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
Rational dot(const RatVec& a, const RatVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, long long s);
IntVec negate(const IntVec& a);
bool is_zero_vec(const IntVec& a);
RatVec to_rat(const IntVec& a);
RatMat to_rat(const IntMat& a);

Rational determinant(RatMat a);
// Inverse of a square rational matrix; throws std::domain_error if singular.
RatMat inverse(RatMat a);
// Inverse of an integer matrix required to be unimodular.
IntMat inverse_unimodular(const IntMat& a);
RatMat rat_matmul(const RatMat& a, const RatMat& b);
int rank(RatMat a);
// Solves a x = b; nullopt when inconsistent. Returns one solution.
bool solve(const RatMat& a, const RatVec& b, RatVec& x);

// Characteristic polynomial det(x I - a), increasing degree.
Poly<Rational> char_poly(const IntMat& a);
// Smallest k >= 1 with a^k = I; throws past the limit.
int matrix_order(const IntMat& a, int limit = 1000);

// Basis (rows) of the lattice spanned by the given row vectors.
IntMat lattice_basis(const IntMat& rows);
// Basis (rows) of { x in Z^cols : a x = 0 }.
IntMat integer_kernel(const IntMat& a);
// Nonzero Smith invariants of a (d_1 | d_2 | ...), including 1s.
std::vector<long long> smith_invariants(IntMat a);

}  // namespace adjgamma
