#include "sextic/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sextic {

mpz_class AbelianInvariants::order() const {
  mpz_class n = 1;
  for (const mpz_class& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::format() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  std::size_t i = 0;
  while (i < torsion.size()) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string s = "C" + torsion[i].get_str();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(s);
    i = j;
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += "x" + parts[k];
  return out;
}

AbelianInvariants SmithForm::invariants() const {
  AbelianInvariants a;
  std::size_t nonzero = 0;
  for (const mpz_class& d : diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) a.torsion.push_back(d);
  }
  a.free_rank = cols - nonzero;
  return a;
}

SmithForm smith_form(const IntMatrix& input, std::size_t cols) {
  for (const auto& r : input)
    if (r.size() != cols) throw std::invalid_argument("smith_form: ragged matrix");
  // Zero and repeated rows do not change the cokernel.
  IntMatrix a;
  {
    std::set<std::vector<mpz_class>> seen;
    for (const auto& r : input)
      if (std::any_of(r.begin(), r.end(), [](const mpz_class& x) { return sgn(x) != 0; }) &&
          seen.insert(r).second)
        a.push_back(r);
  }
  const std::size_t rows = a.size();
  IntMatrix v(cols, std::vector<mpz_class>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1;

  // Rows and columns before t_start are already diagonal.
  std::size_t t_start = 0;
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  };
  // col_j -= q * col_i
  auto sub_col = [&](std::size_t j, std::size_t i, const mpz_class& q) {
    for (std::size_t r = t_start; r < rows; ++r)
      if (sgn(a[r][i]) != 0) mpz_submul(a[r][j].get_mpz_t(), q.get_mpz_t(), a[r][i].get_mpz_t());
    for (auto& r : v)
      if (sgn(r[i]) != 0) mpz_submul(r[j].get_mpz_t(), q.get_mpz_t(), r[i].get_mpz_t());
  };
  auto sub_row = [&](std::size_t j, std::size_t i, const mpz_class& q) {
    for (std::size_t c = t_start; c < cols; ++c)
      if (sgn(a[i][c]) != 0) mpz_submul(a[j][c].get_mpz_t(), q.get_mpz_t(), a[i][c].get_mpz_t());
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    t_start = t;
    while (true) {
      // Pivot: smallest nonzero |entry| in the remaining block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 &&
              (pr == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
        if (pr != rows && mpz_cmpabs_ui(a[pr][pc].get_mpz_t(), 1) == 0) break;
      }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      if (pc != t) swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0) sub_row(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        sub_col(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a non-multiple from the block into row t.
      std::size_t bad = rows;
      if (mpz_cmpabs_ui(a[t][t].get_mpz_t(), 1) == 0) break;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[bad][c];
    }
    if (a[t][t] < 0) {
      for (auto& r : a) r[t] = -r[t];
      for (auto& r : v) r[t] = -r[t];
    }
  }
  SmithForm s;
  s.cols = cols;
  for (std::size_t t = 0; t < n; ++t) s.diagonal.push_back(a[t][t]);
  s.column_transform = std::move(v);
  return s;
}

AbelianInvariants smith_normal_form(const IntMatrix& m, std::size_t cols) {
  return smith_form(m, cols).invariants();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  for (const Word& r : p.relators()) {
    std::vector<mpz_class> row(p.generator_count(), 0);
    for (Letter l : r.letters()) row[l.generator()] += l.sign();
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  return smith_normal_form(relation_matrix(p), p.generator_count());
}

bool is_perfect(const Presentation& p) { return abelianization(p).trivial(); }

}  // namespace sextic
