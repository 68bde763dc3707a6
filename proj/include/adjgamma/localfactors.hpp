#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjgamma/json_io.hpp"
#include "adjgamma/restricted.hpp"
#include "adjgamma/uratfun.hpp"

namespace adjgamma {

// Raised when an operation's mathematical precondition fails (exit code 3 in the CLI).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Summand lambda (x) Sp(n+1): Frobenius eigenvalues lambda q^{n/2 - i}, i = 0..n,
 * monodromy a single Jordan block; ker N carries lambda q^{-n/2}. */
struct WDSummand {
  QMonomial lambda;
  int n = 0;
  int mult = 1;
};

struct UnramifiedWDRep {
  std::vector<WDSummand> summands;

  int dim() const;
  UnramifiedWDRep dual() const;
  bool is_self_dual() const;
  // Frobenius-semisimple part with N = 0, one summand per eigenvalue.
  UnramifiedWDRep semisimplify() const;
  std::string to_string() const;
};

UnramifiedWDRep rep_from_json(const json& j);
json rep_to_json(const UnramifiedWDRep& r);
// {"mu": ["p/q", ...], "nu": ["p/q", ...]}
TorusPoint torus_point_from_json(const json& j);
json torus_point_to_json(const TorusPoint& t);

std::vector<QMonomial> frobenius_semisimple_eigenvalues(const UnramifiedWDRep& r);

// Factors as rational functions of u = q^{-s}. dual = true uses rho^vee.
URatFun L_factor(const UnramifiedWDRep& r, bool dual = false);
// L(1 - s, rho^vee) written in u.
URatFun L_factor_dual_reflected(const UnramifiedWDRep& r);
// psi_order 0: unramified character; -1: conductor one step larger.
URatFun epsilon_factor(const UnramifiedWDRep& r, int psi_order);
URatFun gamma_factor_urat(const UnramifiedWDRep& r, int psi_order);

// Behaviour of gamma(s, r, psi) at s = 0, composed summand by summand.
UOneLimit gamma_at_zero(const UnramifiedWDRep& r, int psi_order);
// Order at s = 0 only (no value computation).
int gamma_order_at_zero(const UnramifiedWDRep& r);
// gamma(0, r, psi) when it is finite and nonzero; PreconditionError otherwise.
QRatFun gamma_value(const UnramifiedWDRep& r, int psi_order);

// gamma(0, rho) / gamma(0, rho_0) for self-dual rho with rho_0 its semisimplification.
QRatFun prop_A1_ratio(const UnramifiedWDRep& r, int psi_order);

/* Random self-dual representation with dim <= max_dim and n <= max_n.
 * Eigenvalues are drawn from +-q^{k/2}, zeta_3^j q^k, zeta_4^j q^{k/2}, zeta_6^j q^k
 * and paired with their inverses. Uses only raw engine output, so the
 * sequence is the same on every platform. */
UnramifiedWDRep random_self_dual_rep(std::mt19937_64& rng, int max_dim = 12, int max_n = 4);

// Eigenvalues (with multiplicity) of theta on X^* (x) C.
std::vector<QMonomial> theta_eigenvalues(const IntMat& theta);
// Ad(r theta) on the Lie algebra of the dual group modulo the theta-fixed
// central directions, as a sum of N = 0 summands.
UnramifiedWDRep adjoint_rep_semisimplified(const RestrictedRootSystem& dual_rs, const TorusPoint& r);

}  // namespace adjgamma
