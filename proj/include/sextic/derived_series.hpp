#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sextic/coset_enum.hpp"
#include "sextic/presentation.hpp"
#include "sextic/smith.hpp"

namespace sextic {

/// Thrown when G/G' is infinite and a derived subgroup table is requested.
class InfiniteAbelianizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coset table of G' in G: the regular action of the finite group G/G'.
/// Throws InfiniteAbelianizationError if G/G' is infinite and
/// coset::OverflowError if |G/G'| exceeds limits.max_cosets.
coset::CosetTable derived_subgroup_table(const Presentation& p,
                                         const coset::EnumerationLimits& limits = {});

/// Simplified presentation of G'.
Presentation derived_subgroup(const Presentation& p, const coset::EnumerationLimits& limits = {});

struct DerivedLevel {
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t relator_length = 0;
  /// G^(k) / G^(k+1).
  AbelianInvariants quotient;
  /// |G^(k)|, when finite and known.
  std::optional<std::uint64_t> order;
  Presentation presentation;
};

struct DerivedSeriesOptions {
  std::size_t max_depth = 10;
  coset::EnumerationLimits limits;
  /// Enumerate every level's own presentation and check it against
  /// |G^(k)| = |G^(k)/G^(k+1)| * |G^(k+1)|. Otherwise orders below the top
  /// are obtained by division.
  bool enumerate_levels = false;
};

struct DerivedSeriesReport {
  enum class Stop { trivial, perfect, infinite_abelianization, max_depth, overflow };
  std::vector<DerivedLevel> levels;
  Stop stop = Stop::max_depth;
  /// False if an enumerated level order disagreed with the division rule.
  bool consistent = true;

  /// Nontrivial quotients top first, then "perfect:N" (or "perfect:?")
  /// if the series ends in a nontrivial perfect group.
  std::vector<std::string> factors() const;
  std::optional<std::uint64_t> order() const {
    return levels.empty() ? std::nullopt : levels.front().order;
  }
};

std::string stop_name(DerivedSeriesReport::Stop s);

DerivedSeriesReport derived_series(const Presentation& p, const DerivedSeriesOptions& opt = {});

}  // namespace sextic
