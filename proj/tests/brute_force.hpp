#pragma once

// Group orders over small finite fields by exhaustive enumeration.

#include <array>
#include <functional>
#include <vector>

#include "adjgamma/poly.hpp"
#include "adjgamma/rational.hpp"

namespace brute {

using adjgamma::Poly;
using adjgamma::Rational;

inline long long eval_at(const Poly<Rational>& p, long q) {
  Rational r = 0, x = 1;
  for (auto& c : p.coeffs()) {
    r += c * x;
    x *= q;
  }
  return adjgamma::to_ll(r.get_num());
}

// --- brute-force group orders over small finite fields ---

inline long long count_matrices(int n, int p, const std::function<bool(const std::vector<int>&)>& pred) {
  int total = n * n;
  std::vector<int> m(total, 0);
  long long count = 0;
  for (;;) {
    if (pred(m)) ++count;
    int i = 0;
    while (i < total && ++m[i] == p) m[i++] = 0;
    if (i == total) break;
  }
  return count;
}

inline int det_mod(const std::vector<int>& m, int n, int p) {
  if (n == 2) return ((m[0] * m[3] - m[1] * m[2]) % p + p) % p;
  int d = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
  return (d % p + p) % p;
}

inline long long brute_sl(int n, int p) {
  return count_matrices(n, p, [&](const std::vector<int>& m) { return det_mod(m, n, p) == 1; });
}

inline long long brute_gl(int n, int p) {
  return count_matrices(n, p, [&](const std::vector<int>& m) { return det_mod(m, n, p) != 0; });
}

// Sp4(F2): 4x4 matrices over F2 preserving the standard alternating form.
inline long long brute_sp4_2() {
  long long count = 0;
  auto form = [](int x, int y) {  // J = [[0,I],[I,0]] over F2
    return ((x & 1) & (y >> 2 & 1)) ^ ((x >> 1 & 1) & (y >> 3 & 1)) ^ ((x >> 2 & 1) & (y & 1)) ^ ((x >> 3 & 1) & (y >> 1 & 1));
  };
  for (int c0 = 0; c0 < 16; ++c0)
    for (int c1 = 0; c1 < 16; ++c1)
      for (int c2 = 0; c2 < 16; ++c2)
        for (int c3 = 0; c3 < 16; ++c3) {
          std::array<int, 4> c{c0, c1, c2, c3};
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j)
              if (form(c[i], c[j]) != form(1 << i, 1 << j)) ok = false;
          if (ok) ++count;
        }
  return count;
}

// F4 = {0, 1, a, a+1} with a^2 = a + 1, elements as 2-bit ints.
inline int f4_mul(int x, int y) {
  static const int t[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return t[x][y];
}
inline int f4_frob(int x) { return f4_mul(x, x); }

// SU3(F2): det 1 and A^* J A = J with J antidiagonal, * = Frobenius transpose.
inline long long brute_su3_2() {
  return count_matrices(3, 4, [](const std::vector<int>& a) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s ^= f4_mul(f4_frob(a[k * 3 + i]), a[(2 - k) * 3 + j]);
        if (s != (i + j == 2 ? 1 : 0)) return false;
      }
    int d = f4_mul(a[0], f4_mul(a[4], a[8])) ^ f4_mul(a[0], f4_mul(a[5], a[7])) ^ f4_mul(a[1], f4_mul(a[3], a[8])) ^
            f4_mul(a[1], f4_mul(a[5], a[6])) ^ f4_mul(a[2], f4_mul(a[3], a[7])) ^ f4_mul(a[2], f4_mul(a[4], a[6]));
    return d == 1;
  });
}

// Norm-one elements of F_{q^2}, q prime, F_{q^2} = F_q[i]/(i^2 - n) for a non-square n.
inline long long brute_norm_one(int q) {
  int n = 2;
  while (true) {
    bool sq = false;
    for (int x = 0; x < q; ++x)
      if (x * x % q == n % q) sq = true;
    if (!sq) break;
    ++n;
  }
  long long c = 0;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (((a * a - n * b * b) % q + q) % q == 1) ++c;
  return c;
}

}  // namespace brute
