#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sextic/presentation.hpp"

namespace sextic {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Invariant factors d1 | d2 | ... | dk (each >= 2) plus the free rank.
struct AbelianInvariants {
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool finite() const { return free_rank == 0; }
  /// Product of the torsion coefficients; only meaningful when finite().
  mpz_class order() const;
  /// "1", "C6", "C2^4", "Z", "C2xC6", "Z^2xC5" ...
  std::string format() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Diagonal form D = U M V with U, V unimodular.
struct SmithForm {
  /// min(rows, cols) diagonal entries, non-negative, in divisibility order
  /// (zeros last).
  std::vector<mpz_class> diagonal;
  /// cols x cols column transform. Row j of V is the image of the standard
  /// basis vector e_j in the diagonal coordinates.
  IntMatrix column_transform;
  std::size_t cols = 0;

  AbelianInvariants invariants() const;
};

/// `cols` gives the width when M has no rows.
SmithForm smith_form(const IntMatrix& m, std::size_t cols);

/// Invariant factors of the cokernel of M acting on Z^cols (M's rows are
/// the relations).
AbelianInvariants smith_normal_form(const IntMatrix& m, std::size_t cols);
inline AbelianInvariants smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(m, m.empty() ? 0 : m.front().size());
}

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

/// Abelianization trivial.
bool is_perfect(const Presentation& p);

}  // namespace sextic
