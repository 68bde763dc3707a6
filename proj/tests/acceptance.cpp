// Acceptance report: one PASS/FAIL line per criterion.

#include <chrono>
#include <iostream>
#include <sstream>

#include "adjgamma/suites.hpp"
#include "brute_force.hpp"

using namespace adjgamma;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string first_failure(const SuiteResult& r) {
  for (auto& rec : r.records)
    if (!rec.skipped && !rec.verdict) return rec.group + " " + rec.point + " " + rec.note;
  return "";
}

std::string counts(const SuiteResult& r) {
  std::ostringstream os;
  os << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped";
  return os.str();
}

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << " (" << detail << ")" << std::endl;
}

std::string time_str(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

void criterion1() {
  auto t0 = Clock::now();
  SuiteOptions o;
  o.cases = 200;
  o.seed = 7;
  SuiteResult r = run_suite("propA1", o);
  double s = seconds_since(t0);
  bool ok = r.ok() && r.passed() >= 200 && s < 30;
  report(1, ok, "semisimplification changes gamma(0) by a sign", counts(r) + ", " + time_str(s) + first_failure(r));
}

void criterion2() {
  auto t0 = Clock::now();
  SuiteResult r = run_suite("thmA2", SuiteOptions{});
  double s = seconds_since(t0);
  auto g = make_group(builtin_group("A1_ad"));
  auto tr = gamma_adjoint_two_routes(g, principal_point(g), -1);
  QRatFun pinned = QRatFun::q_power(Rational(1, 2)) / (QRatFun::q() + QRatFun(1));
  bool pin = tr.gamma_direct == pinned && tr.d && *tr.d == -1;
  bool ok = r.ok() && r.passed() > 0 && pin && s < 300;
  report(2, ok, "adjoint gamma = d * regularized mu at every residual point",
         counts(r) + ", A1 ad pin " + (pin ? "ok" : "wrong") + ", " + time_str(s) + first_failure(r));
}

void criterion3() {
  SuiteResult r = run_suite("residual-discrete", SuiteOptions{});
  int points = 0;
  for (auto& rec : r.records) points += std::stoi(rec.lhs);
  report(3, r.ok() && r.passed() == static_cast<int>(builtin_groups().size()),
         "gamma finite nonzero iff residual on the full grid",
         std::to_string(points) + " grid points over " + std::to_string(r.records.size()) + " groups" + first_failure(r));
}

void criterion4() {
  SuiteResult r = run_suite("lemA5", SuiteOptions{});
  report(4, r.ok() && r.passed() > 0, "adjoint gamma values are conjugation invariant", counts(r) + first_failure(r));
}

void criterion5() {
  SuiteResult r = run_suite("lemA3", SuiteOptions{});
  report(5, r.ok() && r.passed() > 0, "Levi relative gamma = +-mu^M at 8 samples, one sign per case",
         counts(r) + first_failure(r));
}

void criterion6() {
  std::vector<std::string> bad;
  SuiteResult r = run_suite("ratios", SuiteOptions{});
  if (!r.ok()) bad.push_back("ratio route mismatch: " + first_failure(r));
  for (auto& s : builtin_groups()) {
    for (auto& e : ratio_identities(make_group(s)))
      if (e.identity == "iwahori_quotient_order" && (!e.applicable || !e.other_route || !e.consistent()))
        bad.push_back("torus order vs product over simple classes for " + s.name);
  }
  const Isogeny sc{IsogenyKind::SimplyConnected, {}};
  auto sl2 = from_cartan_type("A1", sc);
  auto p = order_polynomial(sl2, identity_twist(sl2));
  if (brute::eval_at(p, 2) != 6 || brute::brute_sl(2, 2) != 6) bad.push_back("|SL2(F2)|");
  if (brute::eval_at(p, 3) != 24 || brute::brute_sl(2, 3) != 24) bad.push_back("|SL2(F3)|");
  auto sl3 = from_cartan_type("A2", sc);
  long long su3 = brute::brute_su3_2();
  if (brute::eval_at(order_polynomial(sl3, twist_from_diagram(sl3, {1, 0})), 2) != su3) bad.push_back("|SU3(F2)|");

  auto find = [](const GroupSpec& s, const std::string& id) {
    for (auto& e : ratio_identities(make_group(s)))
      if (e.identity == id) return e;
    throw std::logic_error("missing identity " + id);
  };
  QRatFun q = QRatFun::q();
  if (find(builtin_group("A1_sc"), "omega_index_ratio").value != QRatFun(2)) bad.push_back("SL2 omega ratio");
  if (find(builtin_group("GL2"), "split_center_factor").value != (q - QRatFun(1)) / QRatFun::q_power(Rational(1, 2)))
    bad.push_back("GL2 split center factor");
  auto an = find(builtin_group("U1"), "anisotropic_center_ratio");
  if (!an.applicable || an.value != QRatFun::q_power(Rational(1, 2)) / (q + QRatFun(1)))
    bad.push_back("anisotropic torus ratio");
  std::string detail = "|SU3(F2)| = " + std::to_string(su3);
  for (auto& b : bad) detail += "; " + b;
  report(6, bad.empty(), "arithmetic identities and brute-force group orders", detail);
}

void criterion7() {
  SuiteResult r = run_suite("q-to-one", SuiteOptions{});
  bool ok = r.ok() && r.passed() == 5 * static_cast<int>(builtin_groups().size());
  report(7, ok, "mu -> 1 as q -> 1 at generic torsion points", counts(r) + first_failure(r));
}

void criterion8() {
  SuiteResult r = run_suite("fdeg-cross", SuiteOptions{});
  report(8, r.ok() && r.passed() == static_cast<int>(builtin_groups().size()),
         "Hecke formal degree = +-|S#| * gamma formal degree at principal points", counts(r) + first_failure(r));
}

}  // namespace

int main() {
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  for (int i = 0; i < 8; ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(i + 1, false, "uncaught exception", e.what());
    }
  }
  std::cout << "criterion 9: N/A  statements about p-adic representations themselves are outside desk-scale "
               "verification; only their computational content is checked above"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
