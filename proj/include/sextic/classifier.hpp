#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/qsqrt5.hpp"
#include "sextic/sections.hpp"

namespace sextic::curves {

enum class ContactKind { smooth_transversal, smooth_tangent, cusp_pass, cusp_tangent, cusp_order5 };
enum class Location { x_zero, x_infinity, elsewhere };

std::string kind_name(ContactKind k);
std::string location_name(Location l);

/// One point of the section meeting the curve, with its local
/// intersection index.
struct Contact {
  ContactKind kind;
  int multiplicity;
  Location where;
  friend bool operator==(const Contact&, const Contact&) = default;
};

/// Intersection of a section with the trigonal curve, point by point.
/// The indices always add up to 6.
struct IntersectionProfile {
  std::vector<Contact> contacts;
  int cusps_off_section = 0;

  int total() const;
  /// Every local intersection index is even.
  bool all_even() const;
  std::string describe() const;
  friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

/// Raised when the data do not describe a genuine section.
class DegenerateSection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Multiplicities come from squarefree decompositions; cusps are located
/// at x = 0 by g(0) and at x = infinity through the chart (c, -b, a).
IntersectionProfile intersection_profile(const Section& s);

/// Formal sum of singularity symbols (A9, A4, W12, Y^1_1,1, ...) of the
/// double covering.
class SingularitySet {
 public:
  SingularitySet() = default;
  void add(const std::string& symbol, int count = 1);

  /// Canonical name, e.g. `A9+2A4+A2`, `W12+2A4`, `Y^1_1,1+A9`.
  std::string name() const;
  const std::vector<std::pair<std::string, int>>& terms() const { return terms_; }
  int count(const std::string& symbol) const;
  bool simple() const;

  bool reducible = false;
  friend bool operator==(const SingularitySet&, const SingularitySet&) = default;

 private:
  std::vector<std::pair<std::string, int>> terms_;
};

/// Throws std::invalid_argument for a profile that violates the invariant
/// or lies outside the dictionary.
SingularitySet singularities_of_double_cover(const IntersectionProfile& profile);
SingularitySet classify_section(const Section& s);

/// A section of the named stratum from its parametrized family.
struct StratumParams {
  QSqrt5 t = QSqrt5(rational(1, 2));
  QSqrt5 free = QSqrt5(0);
  int sign = 1;
  Cusp cusp = Cusp::zero;
};
/// Throws std::invalid_argument for an unknown stratum name.
Section stratum_example(const std::string& name, const StratumParams& params);

}  // namespace sextic::curves
