#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/presentation.hpp"

namespace sextic {

/// How a family's group is obtained.
///  - direct: van Kampen relators for Pi are listed in full; pi is computed
///    as the index-2 kernel.
///  - centrality: delta is central in Pi/delta^2, so pi is the group of the
///    curve complement without the section (the G_proj presentation).
///  - perturbation: the family is a small perturbation of another one whose
///    group is already known; pi is a quotient of that group.
enum class Method { direct, centrality, perturbation };

std::string_view method_name(Method m);

/// Relations printed together for one singular fiber, in parse_word syntax.
/// `D1` and `B2` may appear as abbreviations, expanded by the catalog.
struct RelatorGroup {
  std::string source;
  std::vector<std::string> printed;
};

struct ExpectedResult {
  std::optional<std::uint64_t> order;  // nullopt: infinite
  /// Abelian factors of the derived series, top first, e.g. {"C6","C5"};
  /// a trailing "perfect:N" marks a nontrivial perfect last term.
  std::vector<std::string> derived_factors;
  bool d10_quotient = true;
};

struct CatalogEntry {
  std::string name;
  Method method = Method::direct;
  /// Generators plus expanded relators; absent when nothing is printed.
  std::optional<Presentation> presentation;
  /// The printed relator list is incomplete and must not be enumerated.
  bool partial = false;
  std::vector<RelatorGroup> groups;
  /// Index of the generator delta around the section (Pi entries only).
  std::optional<std::uint32_t> delta;
  /// Relators asserted (not derived from printed data) for the centrality
  /// argument: commutators of delta with the other generators.
  std::vector<Word> assumed_relators;
  /// Source family for the perturbation argument.
  std::string perturbed_from;
  ExpectedResult expected;
  std::vector<std::string> notes;
};

/// Every presentation and family used in the reproduction, in canonical
/// order: the eight D10 families followed by the auxiliaries G_affine and
/// G_proj.
const std::vector<CatalogEntry>& catalog();

/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

/// The eight sets of singularities of D10-sextics in canonical order.
const std::vector<std::string>& d10_family_names();

/// Expand a printed relation, resolving the abbreviations D1 and B2 used by
/// the A9+2A4+A2 relators. Generators are those of `names`.
Word expand_printed(std::string_view printed,
                    const std::vector<std::string>& names);

}  // namespace sextic
