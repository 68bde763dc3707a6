#include "adjgamma/restricted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace adjgamma {

int RestrictedRootSystem::num_positive_classes() const {
  int n = 0;
  for (auto& c : classes)
    if (c.positive) ++n;
  return n;
}

int RestrictedRootSystem::simple_class_of_node(int i) const {
  for (size_t k = 0; k < simple_classes.size(); ++k) {
    auto& sr = classes[simple_classes[k]].simple_roots;
    if (std::find(sr.begin(), sr.end(), i) != sr.end()) return static_cast<int>(k);
  }
  throw std::out_of_range("node not in any simple class");
}

namespace {

// Direction key: vector scaled so that its first nonzero entry has absolute value 1.
RatVec direction(const RatVec& v, Rational& scale_out) {
  RatVec r = v;
  for (auto& x : v)
    if (sgn(x) != 0) {
      scale_out = abs(x);
      break;
    }
  for (auto& x : r) x /= scale_out;
  return r;
}

}  // namespace

RestrictedRootSystem restrict(const RootDatum& d, const Twist& t) {
  RestrictedRootSystem rs;
  rs.datum = d;
  rs.twist = t;
  int nr = d.num_roots();
  std::map<IntVec, int> index;
  for (int i = 0; i < nr; ++i) index[d.roots[i]] = i;
  std::vector<int> image(nr);
  for (int i = 0; i < nr; ++i) {
    auto it = index.find(mat_vec(t.theta, d.roots[i]));
    if (it == index.end()) throw std::invalid_argument("twist does not permute the roots");
    image[i] = it->second;
  }
  // theta-orbits
  std::vector<int> orbit_of(nr, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < nr; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> o;
    int j = i;
    do {
      orbit_of[j] = static_cast<int>(orbits.size());
      o.push_back(j);
      j = image[j];
    } while (j != i);
    orbits.push_back(o);
  }
  // Group orbits by the direction of their restriction.
  struct Pending {
    std::vector<std::pair<Rational, int>> orbits;  // (length of projection, orbit index)
  };
  std::map<RatVec, Pending> groups;
  std::vector<RatVec> group_order;
  for (size_t o = 0; o < orbits.size(); ++o) {
    RatVec p(d.rank, Rational(0));
    for (int r : orbits[o])
      for (int k = 0; k < d.rank; ++k) p[k] += Rational(static_cast<long>(d.roots[r][k]));
    for (auto& x : p) x /= Rational(static_cast<long>(orbits[o].size()));
    Rational sc;
    RatVec dir = direction(p, sc);
    if (!groups.count(dir)) group_order.push_back(dir);
    groups[dir].orbits.emplace_back(sc, static_cast<int>(o));
  }
  std::vector<RestrictedClass> cls;
  for (auto& dir : group_order) {
    auto& g = groups[dir];
    std::sort(g.orbits.begin(), g.orbits.end());
    RestrictedClass c;
    for (auto& [sc, o] : g.orbits) {
      c.orbits.push_back(orbits[o]);
      for (int r : orbits[o]) c.roots.push_back(r);
    }
    std::sort(c.roots.begin(), c.roots.end());
    c.size = static_cast<int>(c.roots.size());
    const auto& o1 = c.orbits[0];
    if (c.orbits.size() == 1) {
      for (int a : o1)
        for (int b : o1)
          if (a != b && dot(d.roots[a], d.coroots[b]) != 0)
            throw std::invalid_argument("theta-orbit of roots is neither orthogonal nor of type A2n");
      c.type = ClassType::I;
      c.m_plus = c.size;
      c.m_minus = 0;
      c.f = c.size;
    } else if (c.orbits.size() == 2 && g.orbits[1].first == 2 * g.orbits[0].first) {
      c.type = ClassType::II;
      c.m_plus = Rational(2 * c.size, 3);
      c.m_minus = Rational(c.size, 3);
      c.m_plus.canonicalize();
      c.m_minus.canonicalize();
      c.f = Rational(4 * c.size, 3);
      c.f.canonicalize();
    } else {
      throw std::invalid_argument("unsupported restricted root class");
    }
    c.gamma.assign(d.rank, 0);
    for (int r : o1) c.gamma = add(c.gamma, d.roots[r]);
    c.class_sum.assign(d.rank, 0);
    for (int r : c.roots) c.class_sum = add(c.class_sum, d.roots[r]);
    c.kac_root = to_rat(c.gamma);
    for (auto& x : c.kac_root) x /= Rational(static_cast<long>(o1.size()));
    c.positive = c.roots[0] < d.num_positive;
    for (int i = 0; i < d.ss_rank; ++i) {
      int ri = index[d.simple_roots[i]];
      if (std::find(c.roots.begin(), c.roots.end(), ri) != c.roots.end()) c.simple_roots.push_back(i);
    }
    cls.push_back(c);
  }
  // Positive classes first ordered by smallest root index, then negatives in matching order.
  std::vector<RestrictedClass> pos, neg;
  for (auto& c : cls) (c.positive ? pos : neg).push_back(c);
  std::sort(pos.begin(), pos.end(), [](auto& a, auto& b) { return a.roots[0] < b.roots[0]; });
  for (auto& p : pos) {
    int nroot = d.negative_index(p.roots[0]);
    auto it = std::find_if(neg.begin(), neg.end(), [&](auto& c) {
      return std::find(c.roots.begin(), c.roots.end(), nroot) != c.roots.end();
    });
    if (it == neg.end()) throw std::logic_error("missing opposite class");
    rs.classes.push_back(p);
  }
  size_t np = pos.size();
  for (size_t k = 0; k < np; ++k) {
    int nroot = d.negative_index(pos[k].roots[0]);
    for (auto& c : neg)
      if (std::find(c.roots.begin(), c.roots.end(), nroot) != c.roots.end()) rs.classes.push_back(c);
  }
  for (size_t k = 0; k < np; ++k) {
    rs.classes[k].opposite = static_cast<int>(k + np);
    rs.classes[k + np].opposite = static_cast<int>(k);
  }
  rs.root_class.assign(nr, -1);
  for (size_t k = 0; k < rs.classes.size(); ++k)
    for (int r : rs.classes[k].roots) rs.root_class[r] = static_cast<int>(k);
  for (int i = 0; i < d.ss_rank; ++i) {
    int c = rs.root_class[index[d.simple_roots[i]]];
    if (std::find(rs.simple_classes.begin(), rs.simple_classes.end(), c) == rs.simple_classes.end())
      rs.simple_classes.push_back(c);
  }
  IntMat m = t.theta;
  for (int i = 0; i < d.rank; ++i) m[i][i] -= 1;
  rs.fixed_dim = d.rank - rank(to_rat(m));
  return rs;
}

Rational invariant_form(const RootDatum& d, const RatVec& x, const RatVec& y) {
  Rational s = 0;
  for (auto& c : d.coroots) s += dot(c, x) * dot(c, y);
  return s;
}

std::vector<QMonomial> class_eigenvalues(const RestrictedRootSystem& rs, int a, const TorusPoint& r) {
  const auto& c = rs.classes[a];
  QMonomial g = r.value(c.gamma);
  if (c.type == ClassType::I) return g.roots(c.size);
  std::vector<QMonomial> ev = (g * QMonomial(Rational(1, 2), Rational(0))).roots(to_ll(c.m_minus.get_num()));
  for (auto& x : g.roots(to_ll(c.m_plus.get_num()))) ev.push_back(x);
  return ev;
}

UPoly char_factor(const RestrictedRootSystem& rs, int a, const TorusPoint& r) {
  UPoly p(QRatFun(1));
  for (auto& l : class_eigenvalues(rs, a, r))
    p = p * UPoly(std::vector<QRatFun>{QRatFun(1), -l.to_qratfun()});
  return p;
}

std::vector<int> levi_subsystem(const RestrictedRootSystem& rs, const std::vector<int>& subset) {
  std::vector<bool> node(rs.datum.ss_rank, false);
  for (int k : subset)
    for (int i : rs.classes[rs.simple_classes.at(k)].simple_roots) node[i] = true;
  std::vector<int> out;
  for (size_t c = 0; c < rs.classes.size(); ++c) {
    const auto& coords = rs.datum.root_coords[rs.classes[c].roots[0]];
    bool inside = true;
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0 && !node[i]) inside = false;
    if (inside) out.push_back(static_cast<int>(c));
  }
  return out;
}

}  // namespace adjgamma
