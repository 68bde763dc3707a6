#include "adjgamma/json_io.hpp"

#include <stdexcept>

namespace adjgamma {

json rational_to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer, got " + j.dump());
}

json cyclo_to_json(const Cyclo& c) {
  Cyclo m = c.minimized();
  json coeffs = json::array();
  for (auto& a : m.coeffs()) coeffs.push_back(rational_to_json(a));
  return json{{"N", m.conductor()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclo(rational_from_json(j));
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
    throw std::invalid_argument("cyclotomic number needs N and coeffs: " + j.dump());
  long n = j.at("N").get<long>();
  if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  std::vector<Rational> c;
  for (auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return Cyclo(n, c);
}

json qratfun_to_json(const QRatFun& f) {
  auto poly = [](const WPoly& p) {
    json a = json::array();
    for (auto& c : p.coeffs()) a.push_back(cyclo_to_json(c));
    return a;
  };
  return json{{"M", f.M()}, {"num", poly(f.num())}, {"den", poly(f.den())}};
}

QRatFun qratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("M") || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("scalar needs M, num and den: " + j.dump());
  auto poly = [](const json& a) {
    std::vector<Cyclo> c;
    for (auto& x : a) c.push_back(cyclo_from_json(x));
    return WPoly(std::move(c));
  };
  long m = j.at("M").get<long>();
  if (m < 1) throw std::invalid_argument("M must be positive");
  return QRatFun(poly(j.at("num")), poly(j.at("den")), m);
}

json qmonomial_to_json(const QMonomial& m) {
  return json{{"turn", rational_to_json(m.turn)}, {"qexp", rational_to_json(m.qexp)}};
}

}  // namespace adjgamma
