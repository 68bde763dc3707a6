#include "adjgamma/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "adjgamma/cyclo.hpp"

namespace adjgamma {

namespace {

std::vector<CartanComponent> parse_type(const std::string& type) {
  std::vector<CartanComponent> comps;
  if (type == "T" || type.empty()) return comps;
  std::stringstream ss(type);
  std::string tok;
  int offset = 0;
  while (std::getline(ss, tok, 'x')) {
    if (tok.size() < 2) throw std::invalid_argument("bad Cartan type '" + type + "'");
    char t = tok[0];
    int r = 0;
    try {
      size_t used = 0;
      r = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad Cartan type '" + type + "'");
    }
    bool ok = (t == 'A' && r >= 1) || (t == 'B' && r >= 2) || (t == 'C' && r >= 2) || (t == 'D' && r >= 4) ||
              (t == 'E' && r >= 6 && r <= 8) || (t == 'F' && r == 4) || (t == 'G' && r == 2);
    if (!ok) throw std::invalid_argument("unsupported Cartan type '" + tok + "'");
    comps.push_back({t, r, offset});
    offset += r;
  }
  return comps;
}

// Block of the Cartan matrix, c[i][j] = <alpha_i, alpha_j^vee>.
IntMat cartan_block(char t, int n) {
  IntMat c = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case 'G':
      link(0, 1);
      c[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("unknown Cartan type");
  }
  return c;
}

struct RootRecord {
  IntVec root, coroot, coords;
};

void generate_roots(RootDatum& d) {
  int s = d.ss_rank;
  std::map<IntVec, RootRecord> pos;
  std::deque<IntVec> queue;
  for (int i = 0; i < s; ++i) {
    IntVec k(s, 0);
    k[i] = 1;
    pos[d.simple_roots[i]] = {d.simple_roots[i], d.simple_coroots[i], k};
    queue.push_back(d.simple_roots[i]);
  }
  while (!queue.empty()) {
    RootRecord r = pos[queue.front()];
    queue.pop_front();
    for (int i = 0; i < s; ++i) {
      long long p = dot(r.root, d.simple_coroots[i]);
      long long pc = dot(d.simple_roots[i], r.coroot);
      RootRecord n{sub(r.root, scale(d.simple_roots[i], p)), sub(r.coroot, scale(d.simple_coroots[i], pc)), r.coords};
      n.coords[i] -= p;
      bool positive = std::all_of(n.coords.begin(), n.coords.end(), [](long long x) { return x >= 0; });
      if (!positive || pos.count(n.root)) continue;
      pos[n.root] = n;
      queue.push_back(n.root);
    }
  }
  std::vector<RootRecord> list;
  for (auto& [k, v] : pos) list.push_back(v);
  std::sort(list.begin(), list.end(), [](const RootRecord& a, const RootRecord& b) {
    long long ha = 0, hb = 0;
    for (auto x : a.coords) ha += x;
    for (auto x : b.coords) hb += x;
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
  d.num_positive = static_cast<int>(list.size());
  d.roots.clear();
  d.coroots.clear();
  d.root_coords.clear();
  for (auto& r : list) {
    d.roots.push_back(r.root);
    d.coroots.push_back(r.coroot);
    d.root_coords.push_back(r.coords);
  }
  for (auto& r : list) {
    d.roots.push_back(negate(r.root));
    d.coroots.push_back(negate(r.coroot));
    d.root_coords.push_back(negate(r.coords));
  }
}

RootDatum build_from_simple(int rank, const std::vector<IntVec>& sr, const std::vector<IntVec>& sc,
                            const std::vector<CartanComponent>& comps, const std::string& label) {
  RootDatum d;
  d.rank = rank;
  d.ss_rank = static_cast<int>(sr.size());
  d.components = comps;
  d.simple_roots = sr;
  d.simple_coroots = sc;
  d.label = label;
  d.cartan = zero_matrix(d.ss_rank, d.ss_rank);
  for (int i = 0; i < d.ss_rank; ++i)
    for (int j = 0; j < d.ss_rank; ++j) d.cartan[i][j] = dot(sr[i], sc[j]);
  generate_roots(d);
  return d;
}

}  // namespace

int RootDatum::find_root(const IntVec& x) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots[i] == x) return i;
  return -1;
}

long long FiniteAbelianGroupDesc::order() const {
  if (free_rank) throw std::domain_error("infinite abelian group");
  long long o = 1;
  for (auto x : invariants) o *= x;
  return o;
}

std::string FiniteAbelianGroupDesc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto x : invariants) {
    os << (first ? "" : " x ") << "Z/" << x;
    first = false;
  }
  for (int i = 0; i < free_rank; ++i) {
    os << (first ? "" : " x ") << "Z";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

RootDatum from_cartan_type(const std::string& type, const Isogeny& iso, int central_rank) {
  if (central_rank < 0) throw std::invalid_argument("central torus rank must be >= 0");
  auto comps = parse_type(type);
  int s = 0;
  for (auto& c : comps) s += c.rank;
  IntMat C = zero_matrix(s, s);
  for (auto& c : comps) {
    IntMat b = cartan_block(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) C[c.offset + i][c.offset + j] = b[i][j];
  }
  IntMat B;
  switch (iso.kind) {
    case IsogenyKind::Adjoint:
      B = C;
      break;
    case IsogenyKind::SimplyConnected:
      B = identity_matrix(s);
      break;
    case IsogenyKind::Explicit:
      B = iso.basis;
      if (static_cast<int>(B.size()) != s || std::any_of(B.begin(), B.end(), [s](const IntVec& r) {
            return static_cast<int>(r.size()) != s;
          }))
        throw std::invalid_argument("isogeny basis must be a square matrix of the semisimple rank");
      break;
  }
  RatMat Binv;
  try {
    Binv = s ? inverse(to_rat(B)) : RatMat{};
  } catch (const std::domain_error&) {
    throw std::invalid_argument("isogeny basis is singular");
  }
  RatMat roots_in_B = rat_matmul(to_rat(C), Binv);
  int n = s + central_rank;
  std::vector<IntVec> sr(s, IntVec(n, 0)), sc(s, IntVec(n, 0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (roots_in_B[i][j].get_den() != 1)
        throw std::invalid_argument("isogeny lattice does not contain the root lattice");
      sr[i][j] = to_ll(roots_in_B[i][j].get_num());
      sc[i][j] = B[j][i];
    }
  std::string label = type.empty() ? "T" : type;
  label += iso.kind == IsogenyKind::Adjoint ? " ad" : iso.kind == IsogenyKind::SimplyConnected ? " sc" : " iso";
  if (central_rank) label += " x T" + std::to_string(central_rank);
  return build_from_simple(n, sr, sc, comps, label);
}

RootDatum dual(const RootDatum& d) {
  auto comps = d.components;
  for (auto& c : comps) {
    if (c.type == 'B') c.type = 'C';
    else if (c.type == 'C') c.type = 'B';
  }
  return build_from_simple(d.rank, d.simple_coroots, d.simple_roots, comps, "dual(" + d.label + ")");
}

Twist dual(const Twist& t) {
  Twist r = t;
  std::swap(r.theta, r.theta_dual);
  return r;
}

Twist identity_twist(const RootDatum& d) {
  Twist t;
  t.theta = identity_matrix(d.rank);
  t.theta_dual = identity_matrix(d.rank);
  for (int i = 0; i < d.ss_rank; ++i) t.perm.push_back(i);
  t.order = 1;
  return t;
}

Twist twist_from_diagram(const RootDatum& d, const std::vector<int>& perm, const IntMat& central_twist) {
  int s = d.ss_rank, n = d.rank, c = n - s;
  std::vector<int> p = perm;
  if (p.empty())
    for (int i = 0; i < s; ++i) p.push_back(i);
  if (static_cast<int>(p.size()) != s) throw std::invalid_argument("twist permutation has wrong length");
  std::vector<int> seen(s, 0);
  for (int x : p) {
    if (x < 0 || x >= s || seen[x]++) throw std::invalid_argument("twist is not a permutation");
  }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (d.cartan[p[i]][p[j]] != d.cartan[i][j])
        throw std::invalid_argument("twist is not a Dynkin diagram automorphism");
  // theta is determined on the semisimple block by alpha_i -> alpha_{p(i)}
  // and alpha_i^vee -> alpha_{p(i)}^vee: in the basis dual to the coroots
  // (fundamental weights) it permutes; transport through the coroot matrix.
  IntMat theta = zero_matrix(n, n);
  if (s) {
    // Columns of A are the simple coroots restricted to the semisimple block,
    // i.e. A^T x gives fundamental-weight coordinates of x.
    IntMat At = zero_matrix(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) At[i][j] = d.simple_coroots[i][j];
    RatMat AtR = to_rat(At), AtInv = inverse(AtR);
    RatMat P(s, RatVec(s, Rational(0)));
    for (int i = 0; i < s; ++i) P[p[i]][i] = 1;  // column convention: e_i -> e_{p(i)}
    RatMat T = rat_matmul(AtInv, rat_matmul(P, AtR));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        if (T[i][j].get_den() != 1) throw std::invalid_argument("twist does not preserve the character lattice");
        theta[i][j] = to_ll(T[i][j].get_num());
      }
  }
  if (c) {
    IntMat ct = central_twist.empty() ? identity_matrix(c) : central_twist;
    if (static_cast<int>(ct.size()) != c) throw std::invalid_argument("central twist has wrong size");
    for (int i = 0; i < c; ++i) {
      if (static_cast<int>(ct[i].size()) != c) throw std::invalid_argument("central twist has wrong size");
      for (int j = 0; j < c; ++j) theta[s + i][s + j] = ct[i][j];
    }
  } else if (!central_twist.empty()) {
    throw std::invalid_argument("central twist given without a central torus");
  }
  Twist t;
  t.theta = theta;
  try {
    t.theta_dual = transpose(inverse_unimodular(theta));
  } catch (const std::domain_error&) {
    throw std::invalid_argument("twist is not invertible over Z");
  }
  t.perm = p;
  try {
    t.order = matrix_order(theta, 240);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("twist does not have finite order");
  }
  validate_twist(d, t);
  return t;
}

void validate_twist(const RootDatum& d, const Twist& t) {
  for (int i = 0; i < d.ss_rank; ++i) {
    if (mat_vec(t.theta, d.simple_roots[i]) != d.simple_roots[t.perm[i]] ||
        mat_vec(t.theta_dual, d.simple_coroots[i]) != d.simple_coroots[t.perm[i]])
      throw std::invalid_argument("twist does not preserve the based root datum");
  }
}

IntMat simple_reflection(const RootDatum& d, int i) {
  IntMat m = identity_matrix(d.rank);
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) m[r][c] -= d.simple_roots[i][r] * d.simple_coroots[i][c];
  return m;
}

IntMat reflection(const RootDatum& d, int k) {
  IntMat m = identity_matrix(d.rank);
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) m[r][c] -= d.roots[k][r] * d.coroots[k][c];
  return m;
}

FiniteAbelianGroupDesc fundamental_group_invariants(const RootDatum& d, const Twist& t) {
  int n = d.rank, s = d.ss_rank;
  // Kernel of [theta_dual - 1 | -A] gives x with (theta_dual - 1) x in the coroot lattice.
  IntMat m = zero_matrix(n, n + s);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = t.theta_dual[i][j] - (i == j ? 1 : 0);
    for (int j = 0; j < s; ++j) m[i][n + j] = -d.simple_coroots[j][i];
  }
  IntMat ker = integer_kernel(m);
  IntMat xs;
  for (auto& k : ker) xs.emplace_back(k.begin(), k.begin() + n);
  IntMat lh = lattice_basis(xs);
  FiniteAbelianGroupDesc g;
  if (lh.empty()) return g;
  RatMat bt = to_rat(transpose(lh));  // n x h
  IntMat y;
  for (int j = 0; j < s; ++j) {
    RatVec sol;
    if (!solve(bt, to_rat(d.simple_coroots[j]), sol)) throw std::logic_error("coroot outside invariant lattice");
    IntVec row;
    for (auto& v : sol) {
      if (v.get_den() != 1) throw std::logic_error("non-integral coroot coordinates");
      row.push_back(to_ll(v.get_num()));
    }
    y.push_back(row);
  }
  auto inv = smith_invariants(y);
  int rk = 0;
  for (auto x : inv) {
    if (x) ++rk;
    if (x > 1) g.invariants.push_back(x);
  }
  g.free_rank = static_cast<int>(lh.size()) - rk;
  return g;
}

static long long torsion_order(const FiniteAbelianGroupDesc& g) {
  long long o = 1;
  for (auto x : g.invariants) o *= x;
  return o;
}

Rational omega_index_ratio(const RootDatum& d, const Twist& t) {
  std::string type;
  for (auto& c : d.components) {
    if (!type.empty()) type += "x";
    type += c.type + std::to_string(c.rank);
  }
  RootDatum ad = from_cartan_type(type, Isogeny{IsogenyKind::Adjoint, {}}, 0);
  Twist tad = twist_from_diagram(ad, t.perm);
  return Rational(static_cast<long>(torsion_order(fundamental_group_invariants(ad, tad)))) /
         Rational(static_cast<long>(torsion_order(fundamental_group_invariants(d, t))));
}

namespace {

struct TypeTable {
  std::vector<int> degrees;
  int positive_roots;
};

TypeTable type_table(char t, int n) {
  TypeTable tt;
  switch (t) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) tt.degrees.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) tt.degrees.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) tt.degrees.push_back(2 * i);
      tt.degrees.push_back(n);
      break;
    case 'E':
      if (n == 6) tt.degrees = {2, 5, 6, 8, 9, 12};
      if (n == 7) tt.degrees = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) tt.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      tt.degrees = {2, 6, 8, 12};
      break;
    case 'G':
      tt.degrees = {2, 6};
      break;
  }
  tt.positive_roots = 0;
  for (int x : tt.degrees) tt.positive_roots += x - 1;
  return tt;
}

// Epsilon turns for a component twisted by a diagram automorphism of order k.
std::vector<Rational> epsilon_turns(char t, int n, int k, const std::vector<int>& degrees) {
  std::vector<Rational> eps(degrees.size(), Rational(0));
  if (k == 1) return eps;
  if (t == 'A' && k == 2) {
    for (size_t i = 0; i < degrees.size(); ++i)
      if (degrees[i] % 2) eps[i] = Rational(1, 2);
    return eps;
  }
  if (t == 'D' && k == 2) {
    eps.back() = Rational(1, 2);
    return eps;
  }
  if (t == 'D' && n == 4 && k == 3) {
    // degrees 2, 4, 6, 4
    eps[1] = Rational(1, 3);
    eps[3] = Rational(2, 3);
    return eps;
  }
  if (t == 'E' && n == 6 && k == 2) {
    for (size_t i = 0; i < degrees.size(); ++i)
      if (degrees[i] == 5 || degrees[i] == 9) eps[i] = Rational(1, 2);
    return eps;
  }
  throw std::invalid_argument("unsupported diagram automorphism");
}

int component_of(const RootDatum& d, int node) {
  for (size_t c = 0; c < d.components.size(); ++c) {
    auto& cc = d.components[c];
    if (node >= cc.offset && node < cc.offset + cc.rank) return static_cast<int>(c);
  }
  throw std::logic_error("node outside components");
}

IntMat central_block(const RootDatum& d, const Twist& t) {
  int s = d.ss_rank, c = d.rank - s;
  IntMat m = zero_matrix(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) m[i][j] = t.theta[s + i][s + j];
  return m;
}

}  // namespace

std::vector<OrderFactor> order_factors(const RootDatum& d, const Twist& t, int& q_power) {
  std::vector<OrderFactor> out;
  q_power = 0;
  std::vector<bool> done(d.components.size(), false);
  for (size_t c = 0; c < d.components.size(); ++c) {
    if (done[c]) continue;
    auto& cc = d.components[c];
    int len = 0;
    size_t cur = c;
    std::vector<int> tau(cc.rank);
    for (int i = 0; i < cc.rank; ++i) tau[i] = cc.offset + i;
    do {
      done[cur] = true;
      ++len;
      for (auto& x : tau) x = t.perm[x];
      cur = static_cast<size_t>(component_of(d, tau[0]));
    } while (cur != c);
    // tau is now the first-return permutation on component c; find its order.
    std::vector<int> local(cc.rank);
    for (int i = 0; i < cc.rank; ++i) local[i] = tau[i] - cc.offset;
    int k = 1;
    std::vector<int> p = local;
    auto is_id = [](const std::vector<int>& v) {
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<int>(i)) return false;
      return true;
    };
    while (!is_id(p)) {
      std::vector<int> np(p.size());
      for (size_t i = 0; i < p.size(); ++i) np[i] = local[p[i]];
      p = np;
      ++k;
    }
    TypeTable tt = type_table(cc.type, cc.rank);
    auto eps = epsilon_turns(cc.type, cc.rank, k, tt.degrees);
    q_power += len * tt.positive_roots;
    for (size_t i = 0; i < tt.degrees.size(); ++i) out.push_back({len * tt.degrees[i], eps[i]});
  }
  return out;
}

Poly<Rational> order_polynomial(const RootDatum& d, const Twist& t) {
  int qp = 0;
  auto factors = order_factors(d, t, qp);
  Poly<Cyclo> p = Poly<Cyclo>::monomial(Cyclo(1), qp);
  for (auto& f : factors)
    p = p * (Poly<Cyclo>::monomial(Cyclo(1), f.degree) - Poly<Cyclo>(Cyclo::from_turn(f.eps_turn)));
  std::vector<Rational> coeffs;
  for (auto& c : p.coeffs()) coeffs.push_back(c.rational_value());
  Poly<Rational> r(coeffs);
  if (d.rank > d.ss_rank) r = r * char_poly(central_block(d, t));
  return r;
}

Poly<Rational> iwahori_quotient_order(const RootDatum& d, const Twist& t) {
  (void)d;
  return char_poly(t.theta);
}

std::vector<IntMat> weyl_elements(const RootDatum& d, size_t bound) {
  std::vector<IntMat> gens;
  for (int i = 0; i < d.ss_rank; ++i) gens.push_back(simple_reflection(d, i));
  std::set<IntMat> seen;
  std::vector<IntMat> out;
  IntMat id = identity_matrix(d.rank);
  seen.insert(id);
  out.push_back(id);
  for (size_t k = 0; k < out.size(); ++k) {
    for (auto& g : gens) {
      IntMat w = matmul(g, out[k]);
      if (seen.insert(w).second) {
        if (out.size() >= bound) throw std::length_error("Weyl group exceeds enumeration bound");
        out.push_back(w);
      }
    }
  }
  return out;
}

std::vector<IntMat> fixed_weyl_elements(const RootDatum& d, const Twist& t, size_t bound) {
  std::vector<IntMat> out;
  for (auto& w : weyl_elements(d, bound))
    if (matmul(t.theta, w) == matmul(w, t.theta)) out.push_back(w);
  return out;
}

int central_fixed_dim(const RootDatum& d, const Twist& t) {
  IntMat c = central_block(d, t);
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) c[i][i] -= 1;
  return n - rank(to_rat(c));
}

std::string format_vec(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace adjgamma
