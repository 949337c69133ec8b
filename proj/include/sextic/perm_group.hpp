#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sextic/coset_enum.hpp"

namespace sextic::coset {

Permutation identity_permutation(std::size_t n);
/// Right action: apply a first, then b.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

/// Shortlex-first words reaching each coset from coset 0 along a
/// breadth-first spanning tree; entry 0 is the identity.
std::vector<Word> coset_representatives(const CosetTable& t);

/// In a regular table (cosets of the trivial subgroup) coset p is the element
/// represented by coset_representatives(t)[p]. Returns the central ones.
std::vector<std::size_t> center_elements(const CosetTable& regular);

/// True iff w commutes with every generator, tested in a regular table.
bool is_central(const CosetTable& regular, const Word& w);

/// Order of the group generated by `gens` (all of one degree), by closure.
/// Returns nullopt once more than `limit` elements have been found.
std::optional<std::uint64_t> generated_order(const std::vector<Permutation>& gens,
                                             std::uint64_t limit = 1'000'000);

}  // namespace sextic::coset
