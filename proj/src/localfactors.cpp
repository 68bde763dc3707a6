#include "adjgamma/localfactors.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace adjgamma {

namespace {

void check_psi(int psi_order) {
  if (psi_order != 0 && psi_order != -1) throw std::invalid_argument("psi order must be 0 or -1");
}

// Eigenvalue on ker N.
QMonomial kernel_value(const WDSummand& s) { return s.lambda * QMonomial::q_power(rat(-s.n, 2)); }

// Pole of L(1 - s, rho^vee) in u: u = lambda^{-1} q^{-n/2 - 1}.
QMonomial dual_pole(const WDSummand& s) {
  return s.lambda.inverse() * QMonomial::q_power(rat(-s.n, 2) - 1);
}

// (-1)^n lambda^n q^{n/2}: the constant of det(-u Fr | V / ker N).
QMonomial epsilon_constant(const WDSummand& s) {
  QMonomial m = s.lambda.pow(s.n) * QMonomial::q_power(rat(s.n, 2));
  if (s.n % 2) m = m * QMonomial(rat(1, 2), Rational(0));
  return m;
}

}  // namespace

int UnramifiedWDRep::dim() const {
  int d = 0;
  for (auto& s : summands) d += s.mult * (s.n + 1);
  return d;
}

UnramifiedWDRep UnramifiedWDRep::dual() const {
  UnramifiedWDRep r;
  for (auto& s : summands) r.summands.push_back({s.lambda.inverse(), s.n, s.mult});
  return r;
}

bool UnramifiedWDRep::is_self_dual() const {
  std::map<std::pair<int, QMonomial>, int> count;
  for (auto& s : summands) count[{s.n, s.lambda}] += s.mult;
  for (auto& [key, m] : count) {
    auto it = count.find({key.first, key.second.inverse()});
    if (it == count.end() || it->second != m) return false;
  }
  return true;
}

UnramifiedWDRep UnramifiedWDRep::semisimplify() const {
  UnramifiedWDRep r;
  for (auto& s : summands)
    for (int k = 0; k <= s.n; ++k)
      r.summands.push_back({s.lambda * QMonomial::q_power(rat(2 * k - s.n, 2)), 0, s.mult});
  return r;
}

std::string UnramifiedWDRep::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < summands.size(); ++i) {
    auto& s = summands[i];
    if (i) os << " + ";
    if (s.mult != 1) os << s.mult << "*";
    os << "[" << s.lambda.to_string() << ", n=" << s.n << "]";
  }
  if (summands.empty()) os << "0";
  return os.str();
}

UnramifiedWDRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("summands") || !j.at("summands").is_array())
    throw std::invalid_argument("WD representation needs a summands array");
  UnramifiedWDRep r;
  for (auto& e : j.at("summands")) {
    WDSummand s;
    Rational turn = 0;
    if (e.contains("zeta")) {
      auto& z = e.at("zeta");
      long n = z.at("N").get<long>();
      if (n < 1) throw std::invalid_argument("zeta order must be positive");
      turn = rat(z.value("k", 1L), n);
    }
    Rational qexp = e.contains("qexp") ? rational_from_json(e.at("qexp")) : Rational(0);
    s.lambda = QMonomial(turn, qexp);
    s.n = e.value("n", 0);
    s.mult = e.value("mult", 1);
    if (s.n < 0) throw std::invalid_argument("summand n must be >= 0");
    if (s.mult < 1) throw std::invalid_argument("summand mult must be >= 1");
    r.summands.push_back(s);
  }
  return r;
}

json rep_to_json(const UnramifiedWDRep& r) {
  json a = json::array();
  for (auto& s : r.summands) {
    json z{{"N", s.lambda.turn.get_den().get_si()}, {"k", s.lambda.turn.get_num().get_si()}};
    a.push_back({{"zeta", z}, {"qexp", rational_to_json(s.lambda.qexp)}, {"n", s.n}, {"mult", s.mult}});
  }
  return json{{"summands", a}};
}

TorusPoint torus_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("nu"))
    throw std::invalid_argument("torus point needs mu and nu arrays");
  RatVec mu, nu;
  for (auto& x : j.at("mu")) mu.push_back(rational_from_json(x));
  for (auto& x : j.at("nu")) nu.push_back(rational_from_json(x));
  return TorusPoint(mu, nu);
}

json torus_point_to_json(const TorusPoint& t) {
  json mu = json::array(), nu = json::array();
  for (auto& x : t.mu) mu.push_back(rational_to_json(x));
  for (auto& x : t.nu) nu.push_back(rational_to_json(x));
  return json{{"mu", mu}, {"nu", nu}};
}

std::vector<QMonomial> frobenius_semisimple_eigenvalues(const UnramifiedWDRep& r) {
  std::vector<QMonomial> ev;
  for (auto& s : r.semisimplify().summands)
    for (int k = 0; k < s.mult; ++k) ev.push_back(s.lambda);
  return ev;
}

namespace {

// c * u^shift * prod (u - root)^e, with cancellation done on the roots.
struct LinearFactors {
  QMonomial c;
  int shift = 0;
  std::map<QMonomial, int> roots;

  // (1 - a u)^e = (-a)^e (u - a^{-1})^e
  void one_minus(const QMonomial& a, int e) {
    c = c * (a * QMonomial(rat(1, 2), Rational(0))).pow(e);
    roots[a.inverse()] += e;
  }
  void u_minus(const QMonomial& d, int e) { roots[d] += e; }

  URatFun to_urat() const {
    UPoly num(c.to_qratfun()), den(QRatFun(1));
    for (auto& [root, e] : roots) {
      if (e == 0) continue;
      UPoly lin(std::vector<QRatFun>{-root.to_qratfun(), QRatFun(1)});
      for (int i = 0; i < std::abs(e); ++i) (e > 0 ? num : den) = (e > 0 ? num : den) * lin;
    }
    if (shift >= 0) num = num.shifted(shift);
    else den = den.shifted(-shift);
    return URatFun::from_coprime(num, den);
  }
};

void add_L(LinearFactors& f, const UnramifiedWDRep& r, int sign) {
  for (auto& s : r.summands) f.one_minus(kernel_value(s), -sign * s.mult);
}

// L(1 - s, rho^vee) = prod u / (u - d)
void add_L_dual_reflected(LinearFactors& f, const UnramifiedWDRep& r) {
  for (auto& s : r.summands) {
    f.shift += s.mult;
    f.u_minus(dual_pole(s), -s.mult);
  }
}

void add_epsilon(LinearFactors& f, const UnramifiedWDRep& r, int psi_order) {
  check_psi(psi_order);
  for (auto& s : r.summands) {
    f.c = f.c * epsilon_constant(s).pow(s.mult);
    f.shift += s.n * s.mult;
  }
  if (psi_order == -1) {
    f.c = f.c * QMonomial::q_power(rat(-r.dim(), 2));
    f.shift -= r.dim();
  }
}

}  // namespace

URatFun L_factor(const UnramifiedWDRep& r, bool dual) {
  LinearFactors f;
  add_L(f, dual ? r.dual() : r, 1);
  return f.to_urat();
}

URatFun L_factor_dual_reflected(const UnramifiedWDRep& r) {
  LinearFactors f;
  add_L_dual_reflected(f, r);
  return f.to_urat();
}

URatFun epsilon_factor(const UnramifiedWDRep& r, int psi_order) {
  LinearFactors f;
  add_epsilon(f, r, psi_order);
  return f.to_urat();
}

URatFun gamma_factor_urat(const UnramifiedWDRep& r, int psi_order) {
  LinearFactors f;
  add_epsilon(f, r, psi_order);
  add_L_dual_reflected(f, r);
  add_L(f, r, -1);
  return f.to_urat();
}

int gamma_order_at_zero(const UnramifiedWDRep& r) {
  int order = 0;
  for (auto& s : r.summands) {
    if (kernel_value(s).is_one()) order += s.mult;
    if (dual_pole(s).is_one()) order -= s.mult;
  }
  return order;
}

UOneLimit gamma_at_zero(const UnramifiedWDRep& r, int psi_order) {
  check_psi(psi_order);
  // Per summand: eps_const * u^{n+1} (1 - c u) / (u - d); u^{n+1} -> 1.
  FactoredValue lead;
  int order = 0;
  for (auto& s : r.summands) {
    QMonomial c = kernel_value(s), d = dual_pole(s);
    lead.times_monomial(epsilon_constant(s).pow(s.mult));
    if (c.is_one()) {
      // 1 - u = -(u - 1)
      order += s.mult;
      if (s.mult % 2) lead.times_scalar(Cyclo(-1));
    } else {
      lead.times_one_minus(c, s.mult);
    }
    if (d.is_one()) order -= s.mult;
    else lead.times_one_minus(d, -s.mult);
  }
  if (psi_order == -1) lead.times_q_power(Rational(-r.dim(), 2));
  return UOneLimit{order, lead.to_qratfun()};
}

QRatFun gamma_value(const UnramifiedWDRep& r, int psi_order) {
  UOneLimit l = gamma_at_zero(r, psi_order);
  if (l.order > 0) throw PreconditionError("gamma vanishes at s = 0 (zero of order " + std::to_string(l.order) + ")");
  if (l.order < 0) throw PreconditionError("gamma has a pole at s = 0 (order " + std::to_string(-l.order) + ")");
  return l.leading;
}

QRatFun prop_A1_ratio(const UnramifiedWDRep& r, int psi_order) {
  if (!r.is_self_dual()) throw PreconditionError("representation is not self-dual");
  QRatFun g = gamma_value(r, psi_order);
  QRatFun g0 = gamma_value(r.semisimplify(), psi_order);
  return g / g0;
}

UnramifiedWDRep random_self_dual_rep(std::mt19937_64& rng, int max_dim, int max_n) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)); };
  UnramifiedWDRep r;
  int target = pick(1, max_dim);
  int dim = 0;
  for (int attempt = 0; attempt < 64 && dim < target; ++attempt) {
    int n = pick(0, max_n);
    QMonomial lambda;
    switch (pick(0, 4)) {
      case 0: lambda = QMonomial(Rational(pick(0, 1), 2), Rational(pick(-3, 3), 2)); break;
      case 1: lambda = QMonomial(rat(pick(0, 2), 3), Rational(pick(-2, 2))); break;
      case 2: lambda = QMonomial(rat(pick(0, 3), 4), Rational(pick(-3, 3), 2)); break;
      case 3: lambda = QMonomial(rat(pick(0, 5), 6), Rational(pick(-2, 2))); break;
      default: lambda = QMonomial(Rational(pick(0, 1), 2), Rational(0)); break;
    }
    bool self = lambda == lambda.inverse();
    int cost = (self ? 1 : 2) * (n + 1);
    if (dim + cost > max_dim) continue;
    r.summands.push_back({lambda, n, 1});
    if (!self) r.summands.push_back({lambda.inverse(), n, 1});
    dim += cost;
  }
  if (r.summands.empty()) r.summands.push_back({QMonomial(rat(1, 2), Rational(0)), 0, 1});
  return r;
}

std::vector<QMonomial> theta_eigenvalues(const IntMat& theta) {
  Poly<Rational> p = char_poly(theta);
  int order = matrix_order(theta);
  std::vector<QMonomial> ev;
  for (long k = 1; k <= order && p.degree() > 0; ++k) {
    if (order % k) continue;
    Poly<Rational> phi(cyclotomic_poly(k));
    while (p.degree() > 0) {
      auto [quo, rem] = Poly<Rational>::divmod(p, phi);
      if (!rem.zero()) break;
      p = quo;
      for (long j = 1; j <= k; ++j)
        if (std::gcd(j, k) == 1) ev.push_back(QMonomial::root_of_unity(k, j % k));
    }
  }
  if (p.degree() > 0) throw std::logic_error("characteristic polynomial of a finite-order matrix is not cyclotomic");
  return ev;
}

UnramifiedWDRep adjoint_rep_semisimplified(const RestrictedRootSystem& dual_rs, const TorusPoint& r) {
  const auto& d = dual_rs.datum;
  if (!r.is_fixed_by(dual_rs.twist.theta_dual))
    throw PreconditionError("torus point is not fixed by the twist");
  std::vector<QMonomial> ev = theta_eigenvalues(dual_rs.twist.theta);
  int drop = central_fixed_dim(d, dual_rs.twist);
  for (auto it = ev.begin(); it != ev.end() && drop > 0;) {
    if (it->is_one()) {
      it = ev.erase(it);
      --drop;
    } else {
      ++it;
    }
  }
  for (size_t a = 0; a < dual_rs.classes.size(); ++a)
    for (auto& x : class_eigenvalues(dual_rs, static_cast<int>(a), r)) ev.push_back(x);
  std::map<QMonomial, int> count;
  for (auto& x : ev) ++count[x];
  UnramifiedWDRep rep;
  for (auto& [x, m] : count) rep.summands.push_back({x, 0, m});
  return rep;
}

}  // namespace adjgamma
