#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "sextic/smith.hpp"

namespace sextic::testing {

inline mpz_class det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  mpz_class prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_1 d_2 ... d_k = gcd of all k x k minors.
inline std::vector<mpz_class> minor_gcd_oracle(const IntMatrix& m, std::size_t cols) {
  std::vector<mpz_class> d;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(m.size(), cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.size(), k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        mpz_class x = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g / prev);
    prev = g;
  }
  return d;
}

struct SubgroupPair {
  const char* text;
  std::vector<const char*> subgroup;
};

/// Finite presentations with a subgroup of small index.
inline const std::vector<SubgroupPair>& rs_test_pairs() {
  static const std::vector<SubgroupPair> pairs{
      {"gens: a b\na^2\nb^2\n(a b)^5\n", {"a"}},
      {"gens: a b\na^2\nb^2\n(a b)^5\n", {"a b"}},
      {"gens: a b\na^2\nb^3\n(a b)^5\n", {"a", "b a b^-1"}},
      {"gens: a b\na^2\nb^3\n(a b)^5\n", {"b"}},
      {"gens: a b\na^2\nb^3\n(a b)^4\n", {"a b"}},
      {"gens: a b\na^3\nb^3\n(a b)^3\n[a,b]^2\n", {"a"}},
      {"gens: x y\nx^4\ny^2 = x^2\ny x y^-1 x\n", {"x"}},
      {"gens: a b\na^6\nb^2\nb a b a\n", {"a^2"}},
      {"gens: a b c\na^2\nb^2\nc^2\n(a b)^3\n(b c)^3\n(a c)^2\n", {"a", "b"}},
      {"gens: a b c\na^2\nb^2\nc^2\n(a b)^3\n(b c)^4\n(a c)^2\n", {"a", "c"}},
  };
  return pairs;
}

}  // namespace sextic::testing
