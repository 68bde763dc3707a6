#include "adjgamma/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace adjgamma {

namespace {

std::string signature_string(const std::vector<QMonomial>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::vector<GroupData> groups_of(const SuiteOptions& o) {
  std::vector<GroupData> out;
  for (auto& s : o.groups.empty() ? builtin_groups() : o.groups) out.push_back(make_group(s));
  return out;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

void prop_a1(const SuiteOptions& o, SuiteResult& res) {
  std::mt19937_64 rng(o.seed);
  int checked = 0;
  for (int trial = 0; checked < o.cases && trial < 4 * o.cases + 16; ++trial) {
    UnramifiedWDRep r = random_self_dual_rep(rng);
    SuiteRecord rec;
    rec.identity = "semisimplification_sign";
    rec.group = "rep#" + std::to_string(trial);
    rec.point = r.to_string();
    try {
      QRatFun g = gamma_value(r, 0);
      QRatFun g0 = gamma_value(r.semisimplify(), 0);
      QRatFun ratio = g / g0;
      rec.lhs = g.to_string();
      rec.rhs = g0.to_string();
      rec.ratio = ratio.to_string();
      rec.sign = ratio == QRatFun(1) ? 1 : ratio == QRatFun(-1) ? -1 : 0;
      rec.verdict = rec.sign != 0;
      ++checked;
    } catch (const PreconditionError& e) {
      rec.skipped = true;
      rec.note = e.what();
    }
    res.records.push_back(rec);
  }
  if (checked < o.cases) {
    SuiteRecord rec{"semisimplification_sign", "all", "", "", "", "", 0, false, false,
                    "only " + std::to_string(checked) + " usable cases"};
    res.records.push_back(rec);
  }
}

void thm_a2(const SuiteOptions& o, SuiteResult& res) {
  for (auto& g : groups_of(o)) {
    auto pts = residual_search(g, o.bound_B, o.bound_D, o.rank_bound);
    for (auto& p : pts) {
      SuiteRecord rec;
      rec.identity = "gamma_two_route";
      rec.group = g.spec.name;
      rec.point = signature_string(p.values);
      TwoRoute tr = gamma_adjoint_two_routes(g, p.point, o.psi_order);
      rec.lhs = tr.gamma_psi1.to_string();
      rec.rhs = tr.mu_closed.to_string();
      if (tr.d) {
        rec.ratio = rat_str(*tr.d);
        rec.sign = sgn(*tr.d);
        bool unit_ok = !g.split_semisimple() || abs(*tr.d) == 1;
        rec.verdict = tr.d_expected_form && unit_ok;
        if (!unit_ok) rec.note = "split semisimple but |d| != 1";
        else if (!tr.d_expected_form) rec.note = "d not of the form n1 2^a 3^b";
      } else {
        rec.note = "gamma / mu is not a rational constant";
      }
      res.records.push_back(rec);
    }
    if (pts.empty()) {
      res.records.push_back({"gamma_two_route", g.spec.name, "", "", "", "", 0, false, false, "no residual points found"});
    }
  }
}

std::vector<std::vector<int>> maximal_levis(const GroupData& g) {
  std::vector<std::vector<int>> out;
  int n = g.rank_ss();
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> l;
    for (int i = 0; i < n; ++i)
      if (i != drop) l.push_back(i);
    out.push_back(l);
  }
  return out;
}

std::string levi_string(const std::vector<int>& l) {
  std::string s = "M{";
  for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + "}";
}

void lem_a3(const SuiteOptions& o, SuiteResult& res, bool reality_only) {
  for (auto& g : groups_of(o)) {
    for (auto& levi : maximal_levis(g)) {
      auto pts = residual_search(g, o.bound_B, o.bound_D, levi, o.rank_bound);
      if (pts.empty())
        res.records.push_back({reality_only ? "levi_gamma_real" : "levi_gamma_vs_mu", g.spec.name, levi_string(levi),
                               "", "", "", 0, false, false, "no residual point of the Levi found"});
      for (auto& p : pts) {
        LeviCheck c = gamma_levi_relative_check(g, levi, p.point, o.psi_order, o.samples);
        SuiteRecord rec;
        rec.group = g.spec.name;
        rec.point = levi_string(levi) + " " + signature_string(p.values);
        if (reality_only) {
          rec.identity = "levi_gamma_real";
          rec.lhs = std::to_string(c.unitary_samples) + " unitary samples";
          rec.verdict = c.real_ok && c.unitary_samples > 0;
        } else {
          rec.identity = "levi_gamma_vs_mu";
          rec.lhs = std::to_string(c.samples) + " samples";
          rec.rhs = std::to_string(c.skipped) + " resampled";
          rec.sign = c.sign;
          rec.verdict = c.passed() && c.samples >= o.samples;
        }
        for (auto& f : c.failures) rec.note += (rec.note.empty() ? "" : "; ") + f;
        res.records.push_back(rec);
      }
    }
  }
}

void lem_a5(const SuiteOptions& o, SuiteResult& res) {
  for (auto& g : groups_of(o)) {
    int values = 0;
    std::vector<std::string> bad;
    for (auto& p : search_grid(g, o.bound_B, o.bound_D, g.all_simple_classes(), o.rank_bound)) {
      UnramifiedWDRep rep = adjoint_rep(g, p.point);
      if (gamma_order_at_zero(rep) != 0) continue;
      QRatFun v = gamma_value(rep, o.psi_order);
      ++values;
      if (v.conj() != v) bad.push_back(signature_string(p.values) + ": " + v.to_string());
    }
    SuiteRecord rec;
    rec.identity = "adjoint_gamma_real";
    rec.group = g.spec.name;
    rec.point = "grid";
    rec.lhs = std::to_string(values) + " finite values";
    rec.verdict = bad.empty() && values > 0;
    for (auto& b : bad) rec.note += (rec.note.empty() ? "" : "; ") + b;
    res.records.push_back(rec);
  }
  lem_a3(o, res, true);
}

void ratios(const SuiteOptions& o, SuiteResult& res) {
  SuiteOptions oo = o;
  if (oo.groups.empty()) {
    oo.groups = builtin_groups();
    oo.groups.push_back(builtin_group("GL2"));
    oo.groups.push_back(builtin_group("U1"));
  }
  for (auto& g : groups_of(oo)) {
    for (auto& e : ratio_identities(g)) {
      SuiteRecord rec;
      rec.identity = e.identity;
      rec.group = g.spec.name;
      if (!e.applicable) {
        rec.skipped = true;
        rec.note = "not applicable";
      } else {
        rec.lhs = e.value.to_string();
        if (e.other_route) rec.rhs = e.other_route->to_string();
        rec.verdict = e.consistent();
      }
      res.records.push_back(rec);
    }
  }
}

void residual_discrete(const SuiteOptions& o, SuiteResult& res) {
  for (auto& g : groups_of(o)) {
    int points = 0, residual = 0;
    std::vector<std::string> bad;
    for (auto& p : search_grid(g, o.bound_B, o.bound_D, g.all_simple_classes(), o.rank_bound)) {
      ++points;
      bool res_v = is_residual(g, p.point).verdict;
      bool finite = gamma_order_at_zero(adjoint_rep(g, p.point)) == 0;
      residual += res_v;
      if (res_v != finite)
        bad.push_back(signature_string(p.values) + (res_v ? " residual, gamma not finite nonzero" : " gamma finite nonzero, not residual"));
    }
    SuiteRecord rec;
    rec.identity = "discrete_iff_residual";
    rec.group = g.spec.name;
    rec.point = "grid";
    rec.lhs = std::to_string(points) + " points";
    rec.rhs = std::to_string(residual) + " residual";
    rec.verdict = bad.empty();
    for (auto& b : bad) rec.note += (rec.note.empty() ? "" : "; ") + b;
    res.records.push_back(rec);
  }
}

void q_to_one(const SuiteOptions& o, SuiteResult& res) {
  for (auto& g : groups_of(o)) {
    auto pts = generic_torsion_points(g, 5);
    for (auto& t : pts) {
      SuiteRecord rec;
      rec.identity = "mu_at_q_one";
      rec.group = g.spec.name;
      rec.point = t.to_string();
      Cyclo v = q_to_one_limit(g, MuSpec{}, t);
      rec.lhs = v.to_string();
      rec.rhs = "1";
      rec.verdict = v == Cyclo(1);
      res.records.push_back(rec);
    }
    if (pts.size() < 5)
      res.records.push_back({"mu_at_q_one", g.spec.name, "", "", "", "", 0, false, false,
                             "only " + std::to_string(pts.size()) + " generic points"});
  }
}

void fdeg_cross(const SuiteOptions& o, SuiteResult& res) {
  for (auto& g : groups_of(o)) {
    TorusPoint r = principal_point(g);
    SuiteRecord rec;
    rec.identity = "formal_degree_two_route";
    rec.group = g.spec.name;
    rec.point = "principal";
    long long s = principal_s_sharp(g);
    QRatFun f = formal_degree(g, r, o.psi_order, 1, 0);
    QRatFun h = hecke_formal_degree(g, r);
    QRatFun scaled = f * QRatFun(Rational(static_cast<long>(s)));
    rec.lhs = h.to_string();
    rec.rhs = f.to_string();
    rec.ratio = std::to_string(s);
    rec.sign = h == scaled ? 1 : h == -scaled ? -1 : 0;
    rec.verdict = rec.sign != 0;
    res.records.push_back(rec);
  }
}

}  // namespace

json suite_record_to_json(const SuiteRecord& r) {
  json j;
  j["identity"] = r.identity;
  j["group"] = r.group;
  j["point"] = r.point;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["sign"] = r.sign;
  j["verdict"] = r.skipped ? "skip" : r.verdict ? "pass" : "fail";
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](auto& r) { return !r.skipped && r.verdict; }));
}
int SuiteResult::failed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](auto& r) { return !r.skipped && !r.verdict; }));
}
int SuiteResult::skipped() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](auto& r) { return r.skipped; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"propA1", "thmA2", "lemA3", "lemA5", "ratios", "residual-discrete",
                                              "q-to-one", "fdeg-cross"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  SuiteResult res;
  res.suite = name;
  if (name == "propA1") prop_a1(opts, res);
  else if (name == "thmA2") thm_a2(opts, res);
  else if (name == "lemA3") lem_a3(opts, res, false);
  else if (name == "lemA5") lem_a5(opts, res);
  else if (name == "ratios") ratios(opts, res);
  else if (name == "residual-discrete") residual_discrete(opts, res);
  else if (name == "q-to-one") q_to_one(opts, res);
  else if (name == "fdeg-cross") fdeg_cross(opts, res);
  else throw std::invalid_argument("unknown suite \"" + name + "\"");
  return res;
}

}  // namespace adjgamma
