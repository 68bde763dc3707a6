#include "adjgamma/torus.hpp"

#include <sstream>
#include <stdexcept>

namespace adjgamma {

TorusPoint::TorusPoint(RatVec m, RatVec n) : mu(std::move(m)), nu(std::move(n)) {
  if (mu.size() != nu.size()) throw std::invalid_argument("torus point: mu and nu lengths differ");
  for (auto& x : mu) x = frac(x);
}

TorusPoint TorusPoint::identity(int rank) {
  return TorusPoint(RatVec(rank, Rational(0)), RatVec(rank, Rational(0)));
}

QMonomial TorusPoint::value(const IntVec& x) const {
  if (x.size() != mu.size()) throw std::invalid_argument("character rank does not match torus point");
  return QMonomial(dot(x, mu), dot(x, nu));
}

TorusPoint TorusPoint::transformed(const IntMat& ginv) const {
  IntMat t = transpose(ginv);
  return TorusPoint(mat_vec(t, mu), mat_vec(t, nu));
}

TorusPoint TorusPoint::conj() const {
  RatVec m = mu;
  for (auto& x : m) x = -x;
  return TorusPoint(m, nu);
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  RatVec m = mu, n = nu;
  for (size_t i = 0; i < m.size(); ++i) {
    m[i] += o.mu[i];
    n[i] += o.nu[i];
  }
  return TorusPoint(m, n);
}

bool TorusPoint::is_fixed_by(const IntMat& m) const {
  if (mat_vec(m, nu) != nu) return false;
  RatVec mm = mat_vec(m, mu);
  for (size_t i = 0; i < mm.size(); ++i)
    if (frac(mm[i] - mu[i]) != 0) return false;
  return true;
}

bool TorusPoint::operator==(const TorusPoint& o) const { return mu == o.mu && nu == o.nu; }

std::string TorusPoint::to_string() const {
  std::ostringstream os;
  os << "mu=(";
  for (size_t i = 0; i < mu.size(); ++i) os << (i ? ", " : "") << mu[i].get_str();
  os << ") nu=(";
  for (size_t i = 0; i < nu.size(); ++i) os << (i ? ", " : "") << nu[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace adjgamma
