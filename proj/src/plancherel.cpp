#include "adjgamma/plancherel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adjgamma {

namespace {

const QMonomial MINUS_ONE(Rational(1, 2), Rational(0));

QMonomial q_pow(const Rational& e) { return QMonomial::q_power(e); }

// Weyl group generated by the simple reflections in `nodes`, elements commuting with theta.
std::vector<IntMat> weyl_theta_subgroup(const RootDatum& d, const Twist& t, const std::vector<int>& nodes) {
  std::vector<IntMat> gens;
  for (int i : nodes) gens.push_back(simple_reflection(d, i));
  std::set<IntMat> seen;
  std::vector<IntMat> all{identity_matrix(d.rank)};
  seen.insert(all[0]);
  for (size_t k = 0; k < all.size(); ++k)
    for (auto& s : gens) {
      IntMat w = matmul(s, all[k]);
      if (seen.insert(w).second) {
        if (all.size() > 200000) throw std::length_error("Weyl group exceeds enumeration bound");
        all.push_back(w);
      }
    }
  std::vector<IntMat> out;
  for (auto& w : all)
    if (matmul(t.theta, w) == matmul(w, t.theta)) out.push_back(w);
  return out;
}

std::vector<int> subset_nodes(const GroupData& g, const std::vector<int>& subset) {
  std::vector<int> nodes;
  for (int o : subset)
    for (int i : g.rs.classes.at(g.rs.simple_classes.at(o)).simple_roots) nodes.push_back(i);
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<int> classes_outside(const GroupData& g, const std::vector<int>& levi) {
  std::vector<int> in = levi_subsystem(g.rs, levi), out;
  for (int c = 0; c < static_cast<int>(g.rs.classes.size()); ++c)
    if (std::find(in.begin(), in.end(), c) == in.end()) out.push_back(c);
  return out;
}

void check_fixed(const GroupData& g, const TorusPoint& r) {
  if (static_cast<int>(r.mu.size()) != g.dual_datum.rank)
    throw std::invalid_argument("torus point has length " + std::to_string(r.mu.size()) + ", expected " +
                                std::to_string(g.dual_datum.rank));
  if (!r.is_fixed_by(g.dual_twist.theta_dual)) throw PreconditionError("torus point is not fixed by the twist");
}

struct Accumulator {
  FactoredValue value;
  int zeros = 0, poles = 0;

  // (1 + x)^power if plus, else (1 - x)^power; vanishing factors are counted and skipped.
  void factor(const QMonomial& x, bool plus, int power) {
    bool vanishes = plus ? x == MINUS_ONE : x.is_one();
    if (vanishes) {
      (power > 0 ? zeros : poles) += 1;
      return;
    }
    if (plus) value.times_one_plus(x, power);
    else value.times_one_minus(x, power);
  }

  // (1 - gamma^{-2}) / ((1 + q^{-m-} gamma^{-1}) (1 - q^{-m+} gamma^{-1}))
  void mu_class(const QMonomial& gamma, const Rational& mp, const Rational& mm) {
    QMonomial gi = gamma.inverse();
    factor(gi, true, 1);
    factor(gi, false, 1);
    factor(q_pow(-mm) * gi, true, -1);
    factor(q_pow(-mp) * gi, false, -1);
  }
};

QRatFun poly_in_q(const Poly<Rational>& p) {
  QRatFun r;
  QRatFun qk(1);
  for (auto& c : p.coeffs()) {
    r += qk * QRatFun(c);
    qk *= QRatFun::q();
  }
  return r;
}

bool is_2_3_smooth(mpz_class n) {
  n = abs(n);
  if (n == 0) return false;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

IntMat central_block_of(const RootDatum& d, const Twist& t) {
  int s = d.ss_rank, c = d.rank - s;
  IntMat m = zero_matrix(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) m[i][j] = t.theta[s + i][s + j];
  return m;
}

// char_poly with the factors (x - 1) of the fixed part removed.
Poly<Rational> nonfixed_char_poly(const IntMat& m, int fixed) {
  Poly<Rational> p = char_poly(m);
  Poly<Rational> lin(std::vector<Rational>{Rational(-1), Rational(1)});
  for (int i = 0; i < fixed; ++i) p = Poly<Rational>::divmod(p, lin).first;
  return p;
}

}  // namespace

// ---------------------------------------------------------------- group specs

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw std::invalid_argument("group spec needs a \"type\" field");
  GroupSpec g;
  g.type = j.at("type").get<std::string>();
  g.name = j.value("name", g.type);
  if (j.contains("isogeny")) {
    auto& iso = j.at("isogeny");
    if (iso.is_string()) {
      std::string s = iso.get<std::string>();
      if (s == "ad") g.isogeny.kind = IsogenyKind::Adjoint;
      else if (s == "sc") g.isogeny.kind = IsogenyKind::SimplyConnected;
      else throw std::invalid_argument("isogeny must be \"ad\", \"sc\" or {\"basis\": ...}, got \"" + s + "\"");
    } else if (iso.is_object() && iso.contains("basis")) {
      g.isogeny.kind = IsogenyKind::Explicit;
      g.isogeny.basis = iso.at("basis").get<IntMat>();
    } else {
      throw std::invalid_argument("field \"isogeny\": expected \"ad\", \"sc\" or {\"basis\": [[...]]}");
    }
  }
  if (j.contains("twist")) g.perm = j.at("twist").get<std::vector<int>>();
  g.central_rank = j.value("central_torus_rank", 0);
  if (j.contains("central_twist")) g.central_twist = j.at("central_twist").get<IntMat>();
  return g;
}

json group_spec_to_json(const GroupSpec& g) {
  json j{{"name", g.name}, {"type", g.type}};
  switch (g.isogeny.kind) {
    case IsogenyKind::Adjoint: j["isogeny"] = "ad"; break;
    case IsogenyKind::SimplyConnected: j["isogeny"] = "sc"; break;
    case IsogenyKind::Explicit: j["isogeny"] = json{{"basis", g.isogeny.basis}}; break;
  }
  if (!g.perm.empty()) j["twist"] = g.perm;
  if (g.central_rank) j["central_torus_rank"] = g.central_rank;
  if (!g.central_twist.empty()) j["central_twist"] = g.central_twist;
  return j;
}

std::vector<GroupSpec> builtin_groups() {
  const Isogeny ad{IsogenyKind::Adjoint, {}}, sc{IsogenyKind::SimplyConnected, {}};
  return {
      {"A1_sc", "A1", sc, {}, 0, {}},
      {"A1_ad", "A1", ad, {}, 0, {}},
      {"A2_sc", "A2", sc, {}, 0, {}},
      {"A2_ad", "A2", ad, {}, 0, {}},
      {"B2_sc", "B2", sc, {}, 0, {}},
      {"B2_ad", "B2", ad, {}, 0, {}},
      {"G2", "G2", ad, {}, 0, {}},
      {"A1xA1_swap", "A1xA1", ad, {1, 0}, 0, {}},
      {"2A2_ad", "A2", ad, {1, 0}, 0, {}},
      {"2A3_ad", "A3", ad, {2, 1, 0}, 0, {}},
      {"3D4_ad", "D4", ad, {2, 1, 3, 0}, 0, {}},
  };
}

GroupSpec builtin_group(const std::string& name) {
  for (auto& g : builtin_groups())
    if (g.name == name) return g;
  const Isogeny sc{IsogenyKind::SimplyConnected, {}};
  if (name == "GL2") return {"GL2", "A1", sc, {}, 1, {{1}}};
  if (name == "U1") return {"U1", "T", sc, {}, 1, {{-1}}};
  throw std::invalid_argument("unknown built-in group \"" + name + "\"");
}

bool GroupData::split_semisimple() const {
  return datum.is_semisimple() && twist.theta == identity_matrix(datum.rank);
}

std::vector<int> GroupData::all_simple_classes() const {
  std::vector<int> v(rs.simple_classes.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

GroupData make_group(const GroupSpec& spec) {
  GroupData g;
  g.spec = spec;
  g.datum = from_cartan_type(spec.type, spec.isogeny, spec.central_rank);
  if (spec.central_rank && !spec.central_twist.empty() &&
      static_cast<int>(spec.central_twist.size()) != spec.central_rank)
    throw std::invalid_argument("central_twist must be a " + std::to_string(spec.central_rank) + "x" +
                                std::to_string(spec.central_rank) + " matrix");
  g.twist = twist_from_diagram(g.datum, spec.perm, spec.central_twist);
  validate_twist(g.datum, g.twist);
  g.dual_datum = dual(g.datum);
  g.dual_twist = dual(g.twist);
  g.rs = restrict(g.dual_datum, g.dual_twist);
  int fixed_central = central_fixed_dim(g.dual_datum, g.dual_twist);
  g.t_hat_eigenvalues = theta_eigenvalues(g.dual_twist.theta);
  int drop = fixed_central;
  for (auto it = g.t_hat_eigenvalues.begin(); it != g.t_hat_eigenvalues.end() && drop > 0;) {
    if (it->is_one()) {
      it = g.t_hat_eigenvalues.erase(it);
      --drop;
    } else {
      ++it;
    }
  }
  g.dim_t_hat = g.dual_datum.rank - fixed_central;
  g.dim_g_hat = g.dim_t_hat + g.dual_datum.num_roots();
  if (g.datum.rank > g.datum.ss_rank) {
    IntMat c = central_block_of(g.datum, g.twist);
    Poly<Rational> p = nonfixed_char_poly(c, central_fixed_dim(g.datum, g.twist));
    g.n1 = to_ll(Rational(abs(p.eval_at_one())).get_num());
  }
  g.weyl_theta = fixed_weyl_elements(g.dual_datum, g.dual_twist);
  return g;
}

// ---------------------------------------------------------------- mu functions

MuResult mu_value(const GroupData& g, const MuSpec& spec, const TorusPoint& t) {
  check_fixed(g, t);
  Accumulator acc;
  int roots_outside = 0;
  for (int a : classes_outside(g, spec.levi)) {
    const auto& c = g.rs.classes[a];
    Rational mp = c.m_plus, mm = c.m_minus;
    auto it = spec.overrides.find(a);
    if (it != spec.overrides.end()) std::tie(mp, mm) = it->second;
    acc.mu_class(t.value(c.gamma), mp, mm);
    roots_outside += c.size;
  }
  switch (spec.mode) {
    case PrefactorMode::Standard: acc.value.times_q_power(rat(-roots_outside, 2)); break;
    case PrefactorMode::Custom: acc.value.times_monomial(spec.custom_prefactor); break;
    case PrefactorMode::None: break;
  }
  return MuResult{acc.zeros, acc.poles, acc.value.to_qratfun()};
}

QRatFun regularized_mu(const GroupData& g, const TorusPoint& r) {
  check_fixed(g, r);
  Accumulator acc;
  for (auto& c : g.rs.classes) acc.mu_class(r.value(c.gamma), c.m_plus, c.m_minus);
  acc.value.times_q_power(rat(-g.dim_g_hat, 2));
  for (auto& l : g.t_hat_eigenvalues) acc.value.times_one_minus(q_pow(-1) * l, -1);
  return acc.value.to_qratfun();
}

ResidualReport is_residual(const GroupData& g, const TorusPoint& r) {
  return is_residual(g, r, g.all_simple_classes());
}

ResidualReport is_residual(const GroupData& g, const TorusPoint& r, const std::vector<int>& levi) {
  check_fixed(g, r);
  ResidualReport rep;
  rep.target = static_cast<int>(levi.size());
  for (int a : levi_subsystem(g.rs, levi)) {
    const auto& c = g.rs.classes[a];
    QMonomial v = r.value(c.gamma);
    if (v == q_pow(-c.m_plus) || v == MINUS_ONE * q_pow(-c.m_minus)) ++rep.poles;
    if ((v * v).is_one()) ++rep.zeros;
  }
  rep.verdict = rep.poles - rep.zeros == rep.target;
  return rep;
}

// ---------------------------------------------------------------- torus points

std::vector<RatVec> simple_class_coweights(const GroupData& g, const std::vector<int>& subset) {
  const auto& d = g.dual_datum;
  std::vector<int> nodes = subset_nodes(g, subset);
  int k = static_cast<int>(nodes.size());
  std::vector<RatVec> v(k, RatVec(d.rank, Rational(0)));
  if (k) {
    // v_i = sum_j C[i][j] coroot_j with <alpha_l, v_i> = delta_li, so C A^T = 1.
    RatMat at(k, RatVec(k));
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < k; ++j)
        at[j][l] = Rational(static_cast<long>(dot(d.simple_roots[nodes[l]], d.simple_coroots[nodes[j]])));
    RatMat cm = inverse(at);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int x = 0; x < d.rank; ++x) v[i][x] += cm[i][j] * Rational(static_cast<long>(d.simple_coroots[nodes[j]][x]));
  }
  std::vector<RatVec> out;
  for (int o : subset) {
    RatVec w(d.rank, Rational(0));
    for (int i : g.rs.classes[g.rs.simple_classes[o]].simple_roots) {
      int pos = static_cast<int>(std::find(nodes.begin(), nodes.end(), i) - nodes.begin());
      for (int x = 0; x < d.rank; ++x) w[x] += v[pos][x];
    }
    out.push_back(w);
  }
  return out;
}

TorusPoint point_from_simple_values(const GroupData& g, const std::vector<int>& subset,
                                    const std::vector<QMonomial>& values) {
  if (values.size() != subset.size()) throw std::invalid_argument("one value per simple class expected");
  auto om = simple_class_coweights(g, subset);
  int n = g.dual_datum.rank;
  RatVec mu(n, Rational(0)), nu(n, Rational(0));
  for (size_t o = 0; o < subset.size(); ++o) {
    const auto& c = g.rs.classes[g.rs.simple_classes[subset[o]]];
    Rational k = dot(c.gamma, om[o]);
    for (int x = 0; x < n; ++x) {
      mu[x] += values[o].turn / k * om[o][x];
      nu[x] += values[o].qexp / k * om[o][x];
    }
  }
  return TorusPoint(mu, nu);
}

TorusPoint principal_point(const GroupData& g) {
  std::vector<QMonomial> vals;
  for (int o : g.all_simple_classes())
    vals.push_back(q_pow(static_cast<long>(g.rs.classes[g.rs.simple_classes[o]].simple_roots.size())));
  return point_from_simple_values(g, g.all_simple_classes(), vals);
}

bool is_principal(const GroupData& g, const TorusPoint& r) {
  for (auto& a : g.dual_datum.simple_roots)
    if (r.value(a) != q_pow(1)) return false;
  return true;
}

namespace {

std::vector<QMonomial> signature_with(const GroupData& g, const TorusPoint& r, const std::vector<int>& subset,
                                      const std::vector<IntMat>& group) {
  std::vector<QMonomial> best;
  for (auto& w : group) {
    std::vector<QMonomial> s;
    for (int o : subset) s.push_back(r.value(mat_vec(w, g.rs.classes[g.rs.simple_classes[o]].gamma)));
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<IntMat> subset_weyl(const GroupData& g, const std::vector<int>& subset) {
  if (subset.size() == g.rs.simple_classes.size()) return g.weyl_theta;
  return weyl_theta_subgroup(g.dual_datum, g.dual_twist, subset_nodes(g, subset));
}

}  // namespace

std::vector<QMonomial> canonical_signature(const GroupData& g, const TorusPoint& r, const std::vector<int>& subset) {
  return signature_with(g, r, subset, subset_weyl(g, subset));
}

std::vector<GridPoint> search_grid(const GroupData& g, int B, int D, const std::vector<int>& subset, int rank_bound) {
  if (g.dual_datum.rank > rank_bound)
    throw std::length_error("rank " + std::to_string(g.dual_datum.rank) + " exceeds the search bound " +
                            std::to_string(rank_bound));
  if (B < 0 || D < 1) throw std::invalid_argument("search bounds need B >= 0 and D >= 1");
  std::vector<QMonomial> choices;
  for (long j = 0; j < D; ++j)
    for (int e = -B; e <= B; ++e) choices.push_back(QMonomial(rat(j, D), Rational(e)));
  std::vector<GridPoint> out;
  size_t k = subset.size();
  std::vector<size_t> idx(k, 0);
  for (;;) {
    std::vector<QMonomial> vals;
    for (size_t i = 0; i < k; ++i) vals.push_back(choices[idx[i]]);
    out.push_back({point_from_simple_values(g, subset, vals), vals});
    size_t i = 0;
    while (i < k && ++idx[i] == choices.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return out;
}

std::vector<GridPoint> residual_search(const GroupData& g, int B, int D, int rank_bound) {
  return residual_search(g, B, D, g.all_simple_classes(), rank_bound);
}

std::vector<GridPoint> residual_search(const GroupData& g, int B, int D, const std::vector<int>& levi,
                                       int rank_bound) {
  auto group = subset_weyl(g, levi);
  std::set<std::vector<QMonomial>> seen;
  std::vector<GridPoint> out;
  for (auto& p : search_grid(g, B, D, levi, rank_bound)) {
    if (!is_residual(g, p.point, levi).verdict) continue;
    auto sig = signature_with(g, p.point, levi, group);
    if (seen.insert(sig).second) out.push_back({point_from_simple_values(g, levi, sig), sig});
  }
  std::sort(out.begin(), out.end(), [](const GridPoint& a, const GridPoint& b) { return a.values < b.values; });
  return out;
}

// ---------------------------------------------------------------- gamma factors

UnramifiedWDRep adjoint_rep(const GroupData& g, const TorusPoint& r) {
  check_fixed(g, r);
  return adjoint_rep_semisimplified(g.rs, r);
}

bool has_expected_d_form(const Rational& d, long long n1) {
  if (n1 == 0) return false;
  Rational x = d / Rational(static_cast<long>(n1));
  return is_2_3_smooth(x.get_num()) && is_2_3_smooth(x.get_den());
}

TwoRoute gamma_adjoint_two_routes(const GroupData& g, const TorusPoint& r, int psi_order) {
  if (!is_residual(g, r).verdict)
    throw PreconditionError("point is not residual: the parameter is not discrete, so the adjoint gamma value vanishes");
  UnramifiedWDRep rep = adjoint_rep(g, r);
  TwoRoute out;
  out.gamma_psi1 = gamma_value(rep, -1);
  out.gamma_direct = psi_order == -1 ? out.gamma_psi1 : gamma_value(rep, psi_order);
  out.mu_closed = regularized_mu(g, r);
  auto c = QRatFun::proportionality(out.gamma_psi1, out.mu_closed);
  if (c && c->is_rational()) {
    out.d = c->rational_value();
    out.d_expected_form = has_expected_d_form(*out.d, g.n1);
  }
  return out;
}

LeviCheck gamma_levi_relative_check(const GroupData& g, const std::vector<int>& levi, const TorusPoint& r_M,
                                    int psi_order, int k) {
  if (psi_order != 0 && psi_order != -1) throw std::invalid_argument("psi order must be 0 or -1");
  check_fixed(g, r_M);
  if (!is_residual(g, r_M, levi).verdict) throw PreconditionError("point is not residual for the Levi subsystem");
  LeviCheck rep;
  std::vector<int> missing;
  for (int o : g.all_simple_classes())
    if (std::find(levi.begin(), levi.end(), o) == levi.end()) missing.push_back(o);
  auto om_all = simple_class_coweights(g, g.all_simple_classes());
  std::vector<int> outside = classes_outside(g, levi);
  int roots_outside = 0;
  for (int a : outside) roots_outside += g.rs.classes[a].size;
  MuSpec spec;
  spec.levi = levi;

  static const Rational S[] = {rat(1, 5), rat(2, 7), rat(1, 3), rat(3, 8), rat(4, 9), rat(1, 7), rat(5, 11),
                               rat(2, 13), rat(3, 10), rat(1, 6), rat(7, 12), rat(5, 17)};
  static const Rational X[] = {Rational(0), rat(1, 2), rat(-1, 3), Rational(2), Rational(0), rat(-3, 2),
                               rat(1, 4), rat(5, 3), Rational(0), Rational(-2), rat(3, 5), Rational(1)};
  const int ns = 12, nx = 12;
  int n = g.dual_datum.rank;
  for (int i = 0; rep.samples < k && i < 6 * k + 12; ++i) {
    RatVec mu(n, Rational(0)), nu(n, Rational(0));
    bool unitary = true;
    for (size_t m = 0; m < missing.size(); ++m) {
      Rational s = S[(i + 3 * m) % ns] + Rational(i / ns, 1);
      Rational x = X[(i + 5 * m) % nx];
      if (i >= nx) x += rat(i / nx, 7);
      if (sgn(x) != 0) unitary = false;
      for (int c = 0; c < n; ++c) {
        mu[c] += s * om_all[missing[m]][c];
        nu[c] += x * om_all[missing[m]][c];
      }
    }
    TorusPoint zr = TorusPoint(mu, nu) * r_M;
    std::map<QMonomial, int> count;
    for (int a : outside)
      for (auto& e : class_eigenvalues(g.rs, a, zr)) ++count[e];
    UnramifiedWDRep rho;
    for (auto& [e, m] : count) rho.summands.push_back({e, 0, m});
    UOneLimit lhs = gamma_at_zero(rho, psi_order);
    MuResult rhs = mu_value(g, spec, zr);
    if (lhs.order != 0 || rhs.order() != 0 || rhs.zeros || rhs.poles) {
      ++rep.skipped;
      continue;
    }
    QRatFun rhs_v = rhs.value;
    if (psi_order == 0) rhs_v = rhs_v.times_q_power(rat(roots_outside, 2));
    ++rep.samples;
    int sign = 0;
    if (lhs.leading == rhs_v) sign = 1;
    else if (lhs.leading == -rhs_v) sign = -1;
    if (sign == 0) {
      rep.failures.push_back("z-sample " + zr.to_string() + ": gamma = " + lhs.leading.to_string() +
                             ", mu = " + rhs_v.to_string());
    } else if (rep.sign == 0) {
      rep.sign = sign;
    } else if (rep.sign != sign) {
      rep.consistent = false;
      rep.failures.push_back("sign flips at " + zr.to_string());
    }
    if (unitary) {
      ++rep.unitary_samples;
      if (lhs.leading.conj() != lhs.leading) {
        rep.real_ok = false;
        rep.failures.push_back("gamma not real at unitary sample " + zr.to_string() + ": " + lhs.leading.to_string());
      }
    }
  }
  if (rep.samples < k)
    rep.failures.push_back("only " + std::to_string(rep.samples) + " usable samples out of " + std::to_string(k));
  return rep;
}

// ---------------------------------------------------------------- formal degrees

long long principal_s_sharp(const GroupData& g) {
  auto inv = fundamental_group_invariants(g.datum, g.twist);
  long long n = 1;
  for (auto x : inv.invariants) n *= x;
  return n;
}

QRatFun formal_degree(const GroupData& g, const TorusPoint& r, int psi_order, int dim_rho, long long s_sharp) {
  if (dim_rho < 1) throw std::invalid_argument("dim_rho must be positive");
  if (s_sharp < 0) throw std::invalid_argument("|S#| must be positive");
  if (!is_residual(g, r).verdict)
    throw PreconditionError("point is not residual: the parameter is not discrete, so there is no formal degree");
  if (s_sharp == 0) {
    if (!is_principal(g, r)) throw PreconditionError("principal |S#| requested at a non-principal point");
    s_sharp = principal_s_sharp(g);
  }
  TwoRoute tr = gamma_adjoint_two_routes(g, r, psi_order);
  return tr.gamma_direct * QRatFun(Rational(dim_rho, 1) / Rational(static_cast<long>(s_sharp)));
}

QRatFun iwahori_volume(const GroupData& g) {
  Poly<Rational> p = nonfixed_char_poly(g.dual_twist.theta, central_fixed_dim(g.dual_datum, g.dual_twist));
  return poly_in_q(p).times_q_power(rat(-g.dim_t_hat, 2));
}

QRatFun hecke_formal_degree(const GroupData& g, const TorusPoint& r, const Rational& d_H) {
  if (!is_residual(g, r).verdict)
    throw PreconditionError("point is not residual: the parameter is not discrete, so there is no formal degree");
  MuSpec spec;  // M = T, prefactor q^{(dim t^ - dim g^)/2}
  MuResult m = mu_value(g, spec, r);
  return m.value * QRatFun(d_H) / iwahori_volume(g);
}

std::vector<RatioEntry> ratio_identities(const GroupData& g) {
  std::vector<RatioEntry> out;
  QRatFun q = QRatFun::q();
  {
    RatioEntry e{"omega_index_ratio", QRatFun(omega_index_ratio(g.datum, g.twist)), std::nullopt, true};
    out.push_back(e);
  }
  {
    // det(q - theta | t^) against the product over simple classes
    RatioEntry e;
    e.identity = "iwahori_quotient_order";
    e.value = poly_in_q(nonfixed_char_poly(g.dual_twist.theta, central_fixed_dim(g.dual_datum, g.dual_twist)));
    e.applicable = g.dim_t_hat == g.dual_datum.ss_rank;
    if (e.applicable) {
      QRatFun prod(1);
      for (int o : g.all_simple_classes())
        prod *= QRatFun::q_power(
                    static_cast<long>(g.rs.classes[g.rs.simple_classes[o]].simple_roots.size())) - QRatFun(1);
      e.other_route = prod;
    }
    out.push_back(e);
  }
  {
    int dz = g.datum.rank > g.datum.ss_rank ? central_fixed_dim(g.datum, g.twist) : 0;
    RatioEntry e{"split_center_factor", ((q - QRatFun(1)).times_q_power(rat(-1, 2))).pow(dz), std::nullopt, true};
    out.push_back(e);
  }
  {
    RatioEntry e;
    e.identity = "anisotropic_center_ratio";
    int c = g.datum.rank - g.datum.ss_rank;
    e.applicable = c > 0 && central_fixed_dim(g.datum, g.twist) == 0;
    if (e.applicable) {
      QRatFun order = poly_in_q(char_poly(central_block_of(g.datum, g.twist)));
      e.value = QRatFun::q_power(rat(c, 2)) / order;
    }
    out.push_back(e);
  }
  out.push_back(RatioEntry{"iwahori_volume", iwahori_volume(g), std::nullopt, true});
  return out;
}

Cyclo q_to_one_limit(const GroupData& g, const MuSpec& spec, const TorusPoint& t) {
  MuResult m = mu_value(g, spec, t);
  if (m.zeros || m.poles) throw PreconditionError("point is not generic: some mu factor vanishes identically");
  try {
    return m.value.eval_at_q_one();
  } catch (const std::domain_error&) {
    throw PreconditionError("mu has a pole at q = 1 at this point");
  }
}

std::vector<TorusPoint> generic_torsion_points(const GroupData& g, int count) {
  std::vector<TorusPoint> out;
  auto subset = g.all_simple_classes();
  for (long i = 0; static_cast<int>(out.size()) < count && i < 1000; ++i) {
    long order = i % 2 ? 7 : 5;
    // the exponent tuples of each order in base order - 1, offset by one so no value is trivial
    std::vector<QMonomial> vals;
    long digits = i / 2 + 1;
    for (size_t o = 0; o < subset.size(); ++o, digits /= order - 1)
      vals.push_back(QMonomial::root_of_unity(order, 1 + digits % (order - 1)));
    TorusPoint t = point_from_simple_values(g, subset, vals);
    bool ok = true;
    for (auto& c : g.rs.classes) {
      QMonomial v = t.value(c.gamma);
      if (v.is_one() || v == MINUS_ONE) ok = false;
    }
    if (ok && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

}  // namespace adjgamma
