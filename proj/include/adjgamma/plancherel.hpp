#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjgamma/localfactors.hpp"

namespace adjgamma {

// Input description of an unramified group: Cartan type, isogeny, diagram twist,
// and an optional central torus with its own Frobenius action.
struct GroupSpec {
  std::string name;
  std::string type;
  Isogeny isogeny;
  std::vector<int> perm;
  int central_rank = 0;
  IntMat central_twist;
};

GroupSpec group_spec_from_json(const json& j);
json group_spec_to_json(const GroupSpec& g);
// The suite list: A1 sc/ad, A2 sc/ad, B2 sc/ad, G2, A1xA1 swap, 2A2, 2A3, 3D4 (adjoint).
std::vector<GroupSpec> builtin_groups();
// Builtins plus "GL2" and "U1" (norm-one torus of the unramified quadratic extension).
GroupSpec builtin_group(const std::string& name);

/* Everything derived from a spec. The restricted root system lives on the
 * dual datum; torus points are in X_*(T^) (x) Q. */
struct GroupData {
  GroupSpec spec;
  RootDatum datum;
  Twist twist;
  RootDatum dual_datum;
  Twist dual_twist;
  RestrictedRootSystem rs;
  std::vector<QMonomial> t_hat_eigenvalues;  // theta on t^, fixed central part removed
  int dim_t_hat = 0;
  int dim_g_hat = 0;
  long long n1 = 1;  // det(1 - theta) on the anisotropic central quotient
  std::vector<IntMat> weyl_theta;  // W^theta acting on X^*(T^)

  int rank_ss() const { return static_cast<int>(rs.simple_classes.size()); }
  bool split_semisimple() const;
  std::vector<int> all_simple_classes() const;
};

GroupData make_group(const GroupSpec& spec);

// Parameters m+, m- of a class, with optional overrides.
using ParamOverrides = std::map<int, std::pair<Rational, Rational>>;

enum class PrefactorMode { Standard, Custom, None };

struct MuSpec {
  std::vector<int> levi;  // indices into rs.simple_classes
  ParamOverrides overrides;
  PrefactorMode mode = PrefactorMode::Standard;
  QMonomial custom_prefactor;
};

struct MuResult {
  int zeros = 0;  // vanishing factors omitted from the numerator
  int poles = 0;  // vanishing factors omitted from the denominator
  QRatFun value;  // product of the surviving factors times the prefactor
  int order() const { return zeros - poles; }
};

MuResult mu_value(const GroupData& g, const MuSpec& spec, const TorusPoint& t);
// Regularized mu with prefactor q^{-dim g^/2} / det(1 - q^{-1} theta | t^).
QRatFun regularized_mu(const GroupData& g, const TorusPoint& r);

struct ResidualReport {
  int poles = 0;
  int zeros = 0;
  int target = 0;
  bool verdict = false;
};

ResidualReport is_residual(const GroupData& g, const TorusPoint& r);
// Residuality for the Levi spanned by the given simple classes.
ResidualReport is_residual(const GroupData& g, const TorusPoint& r, const std::vector<int>& levi);

/* Orbit sums of fundamental coweights inside the coroot span of the given
 * simple classes: omega_o pairs to |o| with the class character of o and to 0
 * with the other classes of the subset. */
std::vector<RatVec> simple_class_coweights(const GroupData& g, const std::vector<int>& subset);
// Point with prescribed values of the simple class characters of the subset.
TorusPoint point_from_simple_values(const GroupData& g, const std::vector<int>& subset,
                                    const std::vector<QMonomial>& values);
// All simple roots of the dual take the value q.
TorusPoint principal_point(const GroupData& g);
bool is_principal(const GroupData& g, const TorusPoint& r);

// Values of the subset's simple class characters, minimized over the Weyl group
// of the subset commuting with theta.
std::vector<QMonomial> canonical_signature(const GroupData& g, const TorusPoint& r, const std::vector<int>& subset);

struct GridPoint {
  TorusPoint point;
  std::vector<QMonomial> values;
};
// Simple class values zeta_D^j q^e, 0 <= j < D, -B <= e <= B.
std::vector<GridPoint> search_grid(const GroupData& g, int B, int D, const std::vector<int>& subset,
                                   int rank_bound = 4);
// Residual points up to W^theta, ordered by signature.
std::vector<GridPoint> residual_search(const GroupData& g, int B, int D, int rank_bound = 4);
std::vector<GridPoint> residual_search(const GroupData& g, int B, int D, const std::vector<int>& levi,
                                       int rank_bound = 4);

UnramifiedWDRep adjoint_rep(const GroupData& g, const TorusPoint& r);

struct TwoRoute {
  QRatFun gamma_direct;  // at the requested psi order
  QRatFun gamma_psi1;    // at psi order -1
  QRatFun mu_closed;
  std::optional<Rational> d;  // gamma_psi1 / mu_closed when rational
  bool d_expected_form = false;
};

TwoRoute gamma_adjoint_two_routes(const GroupData& g, const TorusPoint& r, int psi_order);
// d / n1 is +-2^a 3^b.
bool has_expected_d_form(const Rational& d, long long n1);

struct LeviCheck {
  int samples = 0;
  int skipped = 0;
  int sign = 0;
  bool consistent = true;
  int unitary_samples = 0;
  bool real_ok = true;
  std::vector<std::string> failures;
  bool passed() const { return consistent && real_ok && failures.empty(); }
};

LeviCheck gamma_levi_relative_check(const GroupData& g, const std::vector<int>& levi, const TorusPoint& r_M,
                                    int psi_order, int k);

// s_sharp == 0 means "principal": |S#| = |Omega^theta| of the group.
QRatFun formal_degree(const GroupData& g, const TorusPoint& r, int psi_order, int dim_rho, long long s_sharp);
long long principal_s_sharp(const GroupData& g);
QRatFun iwahori_volume(const GroupData& g);
QRatFun hecke_formal_degree(const GroupData& g, const TorusPoint& r, const Rational& d_H = Rational(1));

struct RatioEntry {
  std::string identity;
  QRatFun value;
  std::optional<QRatFun> other_route;  // independent computation, when there is one
  bool applicable = true;
  bool consistent() const { return !other_route || *other_route == value; }
};
std::vector<RatioEntry> ratio_identities(const GroupData& g);

// Exact q = 1 value of mu at a generic point; PreconditionError if some factor
// vanishes there or the value has a pole at q = 1.
Cyclo q_to_one_limit(const GroupData& g, const MuSpec& spec, const TorusPoint& t);
// Torsion points with simple class values of order 5 or 7 and no gamma_a(t) = +-1.
std::vector<TorusPoint> generic_torsion_points(const GroupData& g, int count);

}  // namespace adjgamma
