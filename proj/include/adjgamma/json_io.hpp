#pragma once

#include <json.hpp>

#include "adjgamma/cyclo.hpp"
#include "adjgamma/qmonomial.hpp"
#include "adjgamma/qratfun.hpp"
#include "adjgamma/rational.hpp"

namespace adjgamma {

using nlohmann::json;

// Exact scalars: rationals as "p/q" strings, cyclotomic numbers as
// {"N": n, "coeffs": [...]}, q-rational functions as {"M": m, "num": [...], "den": [...]}
// with dense coefficient lists in increasing powers of w = q^{1/M}.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);
json qratfun_to_json(const QRatFun& f);
QRatFun qratfun_from_json(const json& j);
json qmonomial_to_json(const QMonomial& m);

}  // namespace adjgamma
