#include "adjgamma/intmatrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace adjgamma {

IntMat identity_matrix(int n) {
  IntMat m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat zero_matrix(int rows, int cols) { return IntMat(rows, IntVec(cols, 0)); }

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t = zero_matrix(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r = zero_matrix(static_cast<int>(n), static_cast<int>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      long long x = a[i][l];
      if (!x) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += x * b[l][j];
    }
  return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

RatVec mat_vec(const IntMat& a, const RatVec& x) {
  RatVec r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i]) s += Rational(static_cast<long>(a[i])) * b[i];
  return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec scale(const IntVec& a, long long s) {
  IntVec r = a;
  for (auto& x : r) x *= s;
  return r;
}

IntVec negate(const IntVec& a) { return scale(a, -1); }

bool is_zero_vec(const IntVec& a) {
  for (auto x : a)
    if (x) return false;
  return true;
}

RatVec to_rat(const IntVec& a) {
  RatVec r;
  r.reserve(a.size());
  for (auto x : a) r.emplace_back(static_cast<long>(x));
  return r;
}

RatMat to_rat(const IntMat& a) {
  RatMat r;
  r.reserve(a.size());
  for (auto& row : a) r.push_back(to_rat(row));
  return r;
}

Rational determinant(RatMat a) {
  size_t n = a.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational t = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= t * a[c][j];
    }
  }
  return det;
}

RatMat inverse(RatMat a) {
  size_t n = a.size();
  RatMat inv(n, RatVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational t = a[i][c];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= t * a[c][j];
        inv[i][j] -= t * inv[c][j];
      }
    }
  }
  return inv;
}

IntMat inverse_unimodular(const IntMat& a) {
  RatMat inv = inverse(to_rat(a));
  IntMat r = zero_matrix(static_cast<int>(a.size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      if (inv[i][j].get_den() != 1) throw std::domain_error("matrix is not unimodular");
      r[i][j] = to_ll(inv[i][j].get_num());
    }
  return r;
}

RatMat rat_matmul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, RatVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

int rank(RatMat a) {
  if (a.empty()) return 0;
  size_t n = a.size(), m = a[0].size(), row = 0;
  for (size_t c = 0; c < m && row < n; ++c) {
    size_t p = row;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (size_t i = row + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational t = a[i][c] / a[row][c];
      for (size_t j = c; j < m; ++j) a[i][j] -= t * a[row][j];
    }
    ++row;
  }
  return static_cast<int>(row);
}

bool solve(const RatMat& a, const RatVec& b, RatVec& x) {
  size_t n = a.size(), m = n ? a[0].size() : 0;
  RatMat aug = a;
  for (size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  std::vector<size_t> pivcol;
  size_t row = 0;
  for (size_t c = 0; c < m && row < n; ++c) {
    size_t p = row;
    while (p < n && sgn(aug[p][c]) == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[row]);
    Rational s = 1 / aug[row][c];
    for (size_t j = c; j <= m; ++j) aug[row][j] *= s;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || sgn(aug[i][c]) == 0) continue;
      Rational t = aug[i][c];
      for (size_t j = c; j <= m; ++j) aug[i][j] -= t * aug[row][j];
    }
    pivcol.push_back(c);
    ++row;
  }
  for (size_t i = row; i < n; ++i)
    if (sgn(aug[i][m]) != 0) return false;
  x.assign(m, Rational(0));
  for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = aug[i][m];
  return true;
}

Poly<Rational> char_poly(const IntMat& a) {
  size_t n = a.size();
  RatMat A = to_rat(a);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMat mk(n, RatVec(n, Rational(0)));
  for (size_t k = 1; k <= n; ++k) {
    RatMat am = rat_matmul(A, mk);
    for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    mk = am;
    RatMat amk = rat_matmul(A, mk);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += amk[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return Poly<Rational>(c);
}

int matrix_order(const IntMat& a, int limit) {
  int n = static_cast<int>(a.size());
  IntMat id = identity_matrix(n), p = a;
  for (int k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = matmul(p, a);
  }
  throw std::domain_error("matrix does not have finite order");
}

namespace {

// Integer row echelon form of the first ncols columns, applying ops to whole rows.
void row_echelon(IntMat& m, size_t ncols) {
  size_t row = 0;
  for (size_t c = 0; c < ncols && row < m.size(); ++c) {
    for (;;) {
      size_t best = m.size();
      for (size_t i = row; i < m.size(); ++i)
        if (m[i][c] && (best == m.size() || std::llabs(m[i][c]) < std::llabs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[best], m[row]);
      bool done = true;
      for (size_t i = row + 1; i < m.size(); ++i) {
        if (!m[i][c]) continue;
        long long t = m[i][c] / m[row][c];
        for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= t * m[row][j];
        if (m[i][c]) done = false;
      }
      if (done) {
        ++row;
        break;
      }
    }
  }
}

}  // namespace

IntMat lattice_basis(const IntMat& rows) {
  if (rows.empty()) return {};
  IntMat m = rows;
  row_echelon(m, m[0].size());
  IntMat out;
  for (auto& r : m)
    if (!is_zero_vec(r)) out.push_back(r);
  return out;
}

IntMat integer_kernel(const IntMat& a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  IntMat m(cols);
  for (size_t j = 0; j < cols; ++j) {
    m[j].assign(rows + cols, 0);
    for (size_t i = 0; i < rows; ++i) m[j][i] = a[i][j];
    m[j][rows + j] = 1;
  }
  row_echelon(m, rows);
  IntMat ker;
  for (auto& r : m) {
    bool z = true;
    for (size_t i = 0; i < rows; ++i)
      if (r[i]) z = false;
    if (z) ker.emplace_back(r.begin() + static_cast<long>(rows), r.end());
  }
  return lattice_basis(ker);
}

std::vector<long long> smith_invariants(IntMat a) {
  std::vector<long long> d;
  if (a.empty() || a[0].empty()) return d;
  size_t n = a.size(), m = a[0].size();
  for (size_t t = 0; t < std::min(n, m); ++t) {
    // Find a nonzero pivot in the remaining block.
    size_t pi = n, pj = m;
    for (size_t i = t; i < n && pi == n; ++i)
      for (size_t j = t; j < m; ++j)
        if (a[i][j]) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    std::swap(a[pi], a[t]);
    for (auto& row : a) std::swap(row[pj], row[t]);
    for (;;) {
      bool changed = false;
      for (size_t i = t + 1; i < n; ++i) {
        if (!a[i][t]) continue;
        long long q = a[i][t] / a[t][t];
        for (size_t j = t; j < m; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t]) {
          std::swap(a[i], a[t]);
          changed = true;
        }
      }
      for (size_t j = t + 1; j < m; ++j) {
        if (!a[t][j]) continue;
        long long q = a[t][j] / a[t][t];
        for (size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j]) {
          for (auto& row : a) std::swap(row[j], row[t]);
          changed = true;
        }
      }
      if (changed) continue;
      // Divisibility condition on the remaining block.
      bool fixed = true;
      for (size_t i = t + 1; i < n && fixed; ++i)
        for (size_t j = t + 1; j < m; ++j)
          if (a[i][j] % a[t][t]) {
            for (size_t k = t; k < m; ++k) a[t][k] += a[i][k];
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    d.push_back(std::llabs(a[t][t]));
  }
  return d;
}

}  // namespace adjgamma
