// adjgamma: command-line front end for the library.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "adjgamma/suites.hpp"

using namespace adjgamma;

namespace {

enum Exit { PASS = 0, FAIL = 1, INPUT = 2, PRECONDITION = 3 };

struct Config {
  std::string spec_path;
  std::string group_name;
  std::string groups;
  std::string point_path;
  bool principal = false;
  std::string rep_path;
  int psi = -1;
  std::string format = "text";
  std::string q0;
  std::uint64_t seed = 7;
  int cases = 200;
  int bound_B = 3;
  int bound_D = 6;
  int samples = 8;
  std::string levi;
  std::string prefactor = "standard";
  bool q_to_one = false;
  std::vector<std::string> params;
  int dim_rho = 1;
  std::string s_sharp = "principal";
  std::string suite;
};

// A rendered result: a title, named columns, and rows of strings.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::set<std::string> math_columns;
  std::vector<std::vector<std::string>> rows;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

GroupSpec load_group(const Config& c) {
  if (!c.spec_path.empty()) {
    try {
      return group_spec_from_json(read_json_file(c.spec_path));
    } catch (const json::exception& e) {
      throw std::invalid_argument(c.spec_path + ": " + e.what());
    }
  }
  if (!c.group_name.empty()) return builtin_group(c.group_name);
  throw std::invalid_argument("a group is required: pass --spec PATH or --group NAME");
}

TorusPoint load_point(const Config& c, const GroupData& g) {
  if (c.principal) return principal_point(g);
  if (c.point_path.empty()) throw std::invalid_argument("a point is required: pass --point PATH or --principal");
  try {
    return torus_point_from_json(read_json_file(c.point_path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(c.point_path + ": " + e.what());
  }
}

std::vector<int> parse_levi(const std::string& s, const GroupData& g) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("--levi: expected comma separated class indices, got \"" + s + "\"");
    }
    if (v < 0 || v >= g.rank_ss())
      throw std::invalid_argument("--levi: index " + tok + " out of range 0.." + std::to_string(g.rank_ss() - 1));
    out.push_back(v);
  }
  return out;
}

std::string numeric_string(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12);
  if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z))) os << z.real();
  else os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Adds the numeric column to a quantity/value table.
void add_numeric(Table& t, const Config& c, const std::vector<std::optional<QRatFun>>& values) {
  if (c.q0.empty()) return;
  Rational q0 = parse_rational(c.q0);
  if (sgn(q0) <= 0) throw std::invalid_argument("--q0 must be positive");
  t.columns.push_back("at q = " + c.q0);
  for (size_t i = 0; i < t.rows.size(); ++i)
    t.rows[i].push_back(i < values.size() && values[i] ? numeric_string(values[i]->eval_numeric(q0)) : "");
}

std::string latex_escape(const std::string& s) {
  std::string o;
  for (char ch : s) {
    if (ch == '_' || ch == '#' || ch == '%' || ch == '&') o += '\\';
    o += ch;
  }
  return o;
}

void render(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "records") {
    for (auto& r : t.rows) {
      nlohmann::ordered_json j;
      for (size_t i = 0; i < t.columns.size(); ++i) j[t.columns[i]] = r[i];
      os << j.dump() << "\n";
    }
    return;
  }
  if (format == "latex") {
    os << "% " << t.title << "\n\\begin{tabular}{" << std::string(t.columns.size(), 'l') << "}\n";
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? " & " : "") << latex_escape(t.columns[i]);
    os << " \\\\\n\\hline\n";
    for (auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) {
        os << (i ? " & " : "");
        if (t.math_columns.count(t.columns[i]) && !r[i].empty()) os << "$" << r[i] << "$";
        else os << latex_escape(r[i]);
      }
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return;
  }
  os << t.title << "\n";
  std::vector<size_t> w(t.columns.size());
  for (size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
  for (auto& r : t.rows)
    for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  line(t.columns);
  for (auto& r : t.rows) line(r);
}

std::string matrix_string(const IntMat& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + format_vec(m[i]);
  return s + "]";
}

std::string vec_list(const std::vector<IntVec>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_vec(v[i]);
  return s;
}

Table kv_table(const std::string& title) {
  Table t;
  t.title = title;
  t.columns = {"quantity", "value"};
  t.math_columns = {"value"};
  return t;
}

int cmd_rootdata(const Config& c) {
  GroupData g = make_group(load_group(c));
  Table t = kv_table("root datum of " + g.spec.name);
  t.math_columns.clear();
  t.rows = {{"rank", std::to_string(g.datum.rank)},
            {"semisimple rank", std::to_string(g.datum.ss_rank)},
            {"roots", std::to_string(g.datum.num_roots())},
            {"cartan", matrix_string(g.datum.cartan)},
            {"simple roots", vec_list(g.datum.simple_roots)},
            {"simple coroots", vec_list(g.datum.simple_coroots)},
            {"theta", matrix_string(g.twist.theta)},
            {"|W|", std::to_string(weyl_elements(g.datum).size())},
            {"|W^theta|", std::to_string(fixed_weyl_elements(g.datum, g.twist).size())}};
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_restricted(const Config& c) {
  GroupData g = make_group(load_group(c));
  Table t;
  t.title = "restricted roots of the dual datum of " + g.spec.name;
  t.columns = {"class", "size", "type", "positive", "gamma", "m_plus", "m_minus", "f", "simple"};
  for (size_t i = 0; i < g.rs.classes.size(); ++i) {
    auto& k = g.rs.classes[i];
    std::string simple;
    for (int s : k.simple_roots) simple += (simple.empty() ? "" : " ") + std::to_string(s);
    t.rows.push_back({std::to_string(i), std::to_string(k.size), k.type == ClassType::I ? "I" : "II",
                      k.positive ? "yes" : "no", format_vec(k.gamma), k.m_plus.get_str(), k.m_minus.get_str(),
                      k.f.get_str(), simple});
  }
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_omega(const Config& c) {
  GroupData g = make_group(load_group(c));
  auto inv = fundamental_group_invariants(g.datum, g.twist);
  std::string om = inv.invariants.empty() && inv.free_rank == 0 ? "Z/1" : inv.to_string();
  Table t = kv_table("fundamental group of " + g.spec.name);
  t.math_columns.clear();
  t.rows = {{"Omega^theta", om}, {"Omega_ad/Omega", omega_index_ratio(g.datum, g.twist).get_str()}};
  if (c.format == "text") {
    std::cout << "Omega = " << om << ", Omega_ad/Omega = " << omega_index_ratio(g.datum, g.twist).get_str() << "\n";
    return PASS;
  }
  render(t, c.format, std::cout);
  return PASS;
}

std::string factored_order(const RootDatum& d, const Twist& tw) {
  int qp = 0;
  auto fs = order_factors(d, tw, qp);
  std::string s = qp ? (qp == 1 ? "q" : "q^{" + std::to_string(qp) + "}") : "";
  for (auto& f : fs) {
    std::string qd = f.degree == 1 ? "q" : "q^{" + std::to_string(f.degree) + "}";
    if (sgn(f.eps_turn) == 0) s += "(" + qd + " - 1)";
    else if (f.eps_turn == Rational(1, 2)) s += "(" + qd + " + 1)";
    else s += "(" + qd + " - " + QMonomial(f.eps_turn, Rational(0)).to_string() + ")";
  }
  if (d.rank > d.ss_rank) s += "|Z(F_q)|";
  return s.empty() ? "1" : s;
}

QRatFun poly_value(const Poly<Rational>& p) {
  QRatFun r, qk(1);
  for (auto& a : p.coeffs()) {
    r += qk * QRatFun(a);
    qk *= QRatFun::q();
  }
  return r;
}

int cmd_orderpoly(const Config& c) {
  GroupData g = make_group(load_group(c));
  QRatFun p = poly_value(order_polynomial(g.datum, g.twist));
  Table t = kv_table("order polynomial of " + g.spec.name);
  t.rows = {{"factored", factored_order(g.datum, g.twist)}, {"expanded", p.to_string()}};
  add_numeric(t, c, {std::nullopt, p});
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_gamma(const Config& c) {
  Table t = kv_table("gamma factor at s = 0, psi order " + std::to_string(c.psi));
  std::vector<std::optional<QRatFun>> nums;
  if (!c.rep_path.empty()) {
    UnramifiedWDRep r = rep_from_json(read_json_file(c.rep_path));
    t.rows.push_back({"rep", r.to_string()});
    nums.push_back(std::nullopt);
    t.rows.push_back({"gamma(s)", gamma_factor_urat(r, c.psi).to_string()});
    nums.push_back(std::nullopt);
    UOneLimit l = gamma_at_zero(r, c.psi);
    t.rows.push_back({"order at 0", std::to_string(l.order)});
    nums.push_back(std::nullopt);
    t.rows.push_back({l.order == 0 ? "gamma(0)" : "leading coefficient", l.leading.to_string()});
    nums.push_back(l.leading);
  } else {
    GroupData g = make_group(load_group(c));
    TorusPoint r = load_point(c, g);
    UnramifiedWDRep rep = adjoint_rep(g, r);
    int order = gamma_order_at_zero(rep);
    t.title = "adjoint gamma factor of " + g.spec.name + " at s = 0, psi order " + std::to_string(c.psi);
    t.rows.push_back({"point", r.to_string()});
    nums.push_back(std::nullopt);
    t.rows.push_back({"order at 0", std::to_string(order)});
    nums.push_back(std::nullopt);
    if (order == 0) {
      TwoRoute tr = gamma_adjoint_two_routes(g, r, c.psi);
      t.rows.push_back({"gamma(0)", tr.gamma_direct.to_string()});
      nums.push_back(tr.gamma_direct);
      t.rows.push_back({"regularized mu", tr.mu_closed.to_string()});
      nums.push_back(tr.mu_closed);
      t.rows.push_back({"d", tr.d ? tr.d->get_str() : "not rational"});
      nums.push_back(std::nullopt);
    }
  }
  add_numeric(t, c, nums);
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_mu(const Config& c) {
  GroupData g = make_group(load_group(c));
  TorusPoint r = load_point(c, g);
  MuSpec spec;
  spec.levi = parse_levi(c.levi, g);
  if (c.prefactor == "none") {
    spec.mode = PrefactorMode::None;
  } else if (c.prefactor.rfind("q^", 0) == 0) {
    spec.mode = PrefactorMode::Custom;
    spec.custom_prefactor = QMonomial::q_power(parse_rational(c.prefactor.substr(2)));
  } else if (c.prefactor != "standard") {
    throw std::invalid_argument("--prefactor must be standard, none or q^E");
  }
  for (auto& p : c.params) {
    // CLASS=MPLUS,MMINUS
    auto eq = p.find('='), comma = p.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma < eq)
      throw std::invalid_argument("--param expects CLASS=MPLUS,MMINUS, got \"" + p + "\"");
    int cls = std::stoi(p.substr(0, eq));
    if (cls < 0 || cls >= static_cast<int>(g.rs.classes.size()))
      throw std::invalid_argument("--param: class " + std::to_string(cls) + " out of range");
    Rational mp = parse_rational(p.substr(eq + 1, comma - eq - 1)), mm = parse_rational(p.substr(comma + 1));
    if (sgn(mp) < 0 || sgn(mm) < 0) throw std::invalid_argument("--param: parameters must be nonnegative");
    spec.overrides[cls] = {mp, mm};
  }
  if (c.q_to_one) {
    Cyclo v = q_to_one_limit(g, spec, r);
    Table t = kv_table("mu of " + g.spec.name + " at q = 1");
    t.rows = {{"limit", v.to_string()}};
    render(t, c.format, std::cout);
    return v == Cyclo(1) ? PASS : FAIL;
  }
  MuResult m = mu_value(g, spec, r);
  Table t = kv_table("mu function of " + g.spec.name);
  std::vector<std::optional<QRatFun>> nums;
  t.rows.push_back({"point", r.to_string()});
  nums.push_back(std::nullopt);
  t.rows.push_back({"vanishing numerator factors", std::to_string(m.zeros)});
  nums.push_back(std::nullopt);
  t.rows.push_back({"vanishing denominator factors", std::to_string(m.poles)});
  nums.push_back(std::nullopt);
  t.rows.push_back({m.order() == 0 && m.zeros == 0 ? "mu" : "surviving factors", m.value.to_string()});
  nums.push_back(m.value);
  if (spec.levi.empty()) {
    QRatFun reg = regularized_mu(g, r);
    t.rows.push_back({"regularized mu", reg.to_string()});
    nums.push_back(reg);
  }
  add_numeric(t, c, nums);
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_fdeg(const Config& c) {
  GroupData g = make_group(load_group(c));
  TorusPoint r = load_point(c, g);
  long long s = 0;
  if (c.s_sharp != "principal") {
    try {
      s = std::stoll(c.s_sharp);
    } catch (const std::exception&) {
      s = -1;
    }
    if (s <= 0) throw std::invalid_argument("--s-sharp must be \"principal\" or a positive integer");
  }
  QRatFun f = formal_degree(g, r, c.psi, c.dim_rho, s);
  QRatFun h = hecke_formal_degree(g, r);
  Table t = kv_table("formal degree for " + g.spec.name);
  t.rows = {{"|S#|", std::to_string(s ? s : principal_s_sharp(g))},
            {"formal degree", f.to_string()},
            {"Hecke route (Iwahori)", h.to_string()}};
  add_numeric(t, c, {std::nullopt, f, h});
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_residual(const Config& c) {
  GroupData g = make_group(load_group(c));
  std::vector<int> levi = c.levi.empty() ? g.all_simple_classes() : parse_levi(c.levi, g);
  Table t;
  t.title = "residual points of " + g.spec.name + " (B = " + std::to_string(c.bound_B) +
            ", D = " + std::to_string(c.bound_D) + ")";
  t.columns = {"signature", "point", "principal orbit"};
  auto principal = canonical_signature(g, principal_point(g), levi);
  for (auto& p : residual_search(g, c.bound_B, c.bound_D, levi)) {
    std::string sig;
    for (auto& v : p.values) sig += (sig.empty() ? "" : ", ") + v.to_string();
    t.rows.push_back({"(" + sig + ")", p.point.to_string(), p.values == principal ? "yes" : "no"});
  }
  render(t, c.format, std::cout);
  return PASS;
}

int cmd_verify(const Config& c) {
  SuiteOptions o;
  o.psi_order = c.psi;
  o.cases = c.cases;
  o.seed = c.seed;
  o.bound_B = c.bound_B;
  o.bound_D = c.bound_D;
  o.samples = c.samples;
  if (!c.spec_path.empty() || !c.group_name.empty()) o.groups.push_back(load_group(c));
  if (!c.groups.empty() && c.groups != "builtin") {
    std::stringstream ss(c.groups);
    std::string name;
    while (std::getline(ss, name, ','))
      if (!name.empty()) o.groups.push_back(builtin_group(name));
  }
  SuiteResult res = run_suite(c.suite, o);
  Table t;
  t.title = "verify " + c.suite;
  t.columns = {"identity", "group", "point", "lhs", "rhs", "ratio", "sign", "verdict", "note"};
  t.math_columns = {"lhs", "rhs"};
  for (auto& r : res.records) {
    json j = suite_record_to_json(r);
    t.rows.push_back({r.identity, r.group, r.point, r.lhs, r.rhs, r.ratio, std::to_string(r.sign),
                      j["verdict"].get<std::string>(), r.note});
  }
  if (c.format == "text") {
    std::cout << t.title << "\n";
    for (auto& r : t.rows) {
      std::string line = r[7] + "  " + r[0] + "  " + r[1];
      if (!r[2].empty()) line += "  " + r[2];
      if (!r[3].empty()) line += "  lhs=" + r[3];
      if (!r[4].empty()) line += "  rhs=" + r[4];
      if (!r[5].empty()) line += "  ratio=" + r[5];
      if (!r[8].empty()) line += "  [" + r[8] + "]";
      std::cout << line << "\n";
    }
  } else {
    render(t, c.format, std::cout);
  }
  std::cout << (c.format == "latex" ? "% " : "") << "suite " << c.suite << ": " << res.passed() << " passed, "
            << res.failed() << " failed, " << res.skipped() << " skipped\n";
  return res.ok() ? PASS : FAIL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint gamma factors, mu functions and formal degrees of unramified groups"};
  app.require_subcommand(1);
  Config c;

  auto group_opts = [&](CLI::App* s) {
    s->add_option("--spec", c.spec_path, "group spec JSON file");
    s->add_option("--group", c.group_name, "built-in group name");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "text, records or latex")->check(CLI::IsMember({"text", "records", "latex"}));
  };
  auto point_opts = [&](CLI::App* s) {
    s->add_option("--point", c.point_path, "torus point JSON file {\"mu\": [...], \"nu\": [...]}");
    s->add_flag("--principal", c.principal, "use the principal point");
  };
  auto psi_opt = [&](CLI::App* s) {
    s->add_option("--psi", c.psi, "order of the additive character (0 or -1)")->check(CLI::IsMember({0, -1}));
  };
  auto q0_opt = [&](CLI::App* s) { s->add_option("--q0", c.q0, "also evaluate numerically at this q"); };
  auto bounds = [&](CLI::App* s) {
    s->add_option("--bound-B", c.bound_B, "q-exponent bound of the residual grid");
    s->add_option("--bound-D", c.bound_D, "torsion order bound of the residual grid");
  };

  std::map<std::string, std::function<int(const Config&)>> handlers{
      {"rootdata", cmd_rootdata}, {"restricted", cmd_restricted}, {"omega", cmd_omega},
      {"orderpoly", cmd_orderpoly}, {"gamma", cmd_gamma},         {"mu", cmd_mu},
      {"fdeg", cmd_fdeg},         {"residual", cmd_residual},     {"verify", cmd_verify}};

  for (auto name : {"rootdata", "restricted", "omega"}) {
    auto s = app.add_subcommand(name, std::string("print the ") + name + " data of a group");
    group_opts(s);
    common(s);
  }
  auto orderpoly = app.add_subcommand("orderpoly", "order of the finite group of F_q-points");
  group_opts(orderpoly);
  common(orderpoly);
  q0_opt(orderpoly);

  auto gamma = app.add_subcommand("gamma", "gamma(0, rep) or the adjoint gamma factor at a torus point");
  group_opts(gamma);
  point_opts(gamma);
  gamma->add_option("--rep", c.rep_path, "Weil-Deligne representation JSON file");
  psi_opt(gamma);
  common(gamma);
  q0_opt(gamma);

  auto mu = app.add_subcommand("mu", "mu function at a torus point");
  group_opts(mu);
  point_opts(mu);
  mu->add_option("--levi", c.levi, "simple classes spanning the Levi, comma separated");
  mu->add_option("--prefactor", c.prefactor, "standard (q^{-#roots outside M / 2}), none, or q^E");
  mu->add_option("--param", c.params, "override parameters of a class: CLASS=MPLUS,MMINUS");
  mu->add_flag("--q-to-one", c.q_to_one, "check that mu tends to 1 as q -> 1");
  common(mu);
  q0_opt(mu);

  auto fdeg = app.add_subcommand("fdeg", "formal degree at a residual point");
  group_opts(fdeg);
  point_opts(fdeg);
  psi_opt(fdeg);
  fdeg->add_option("--dim-rho", c.dim_rho, "dimension of the component group representation");
  fdeg->add_option("--s-sharp", c.s_sharp, "|S#|, or \"principal\"");
  common(fdeg);
  q0_opt(fdeg);

  auto residual = app.add_subcommand("residual", "residual points on the search grid");
  group_opts(residual);
  residual->add_option("--levi", c.levi, "restrict to the Levi spanned by these simple classes");
  bounds(residual);
  common(residual);

  auto verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  group_opts(verify);
  verify->add_option("--groups", c.groups, "\"builtin\" or a comma separated list of built-in names");
  psi_opt(verify);
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_option("--cases", c.cases, "number of random cases");
  verify->add_option("--samples", c.samples, "samples per Levi check");
  bounds(verify);
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? PASS : INPUT;
  }

  try {
    for (auto* s : app.get_subcommands()) return handlers.at(s->get_name())(c);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return PRECONDITION;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return INPUT;
  } catch (const std::length_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return INPUT;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return INPUT;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return PRECONDITION;
  }
  return INPUT;
}
