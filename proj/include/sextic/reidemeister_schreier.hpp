#pragma once

#include <vector>

#include "sextic/coset_enum.hpp"
#include "sextic/presentation.hpp"

namespace sextic {

/// Prefix-closed transversal from a breadth-first search at coset 0; entry c
/// represents coset c.
std::vector<Word> schreier_transversal(const coset::CosetTable& t);

struct SubgroupPresentation {
  /// Generators s0, s1, ... are the Schreier generators.
  Presentation presentation;
  /// Schreier generator i as a word in the parent generators.
  std::vector<Word> generator_words;
};

/// Presentation of the stabilizer of coset 0. Generators are the non-tree
/// edges (c, g) of the table; relators are every parent relator rewritten
/// from every coset, freely and cyclically reduced. No Tietze moves.
SubgroupPresentation reidemeister_schreier(const Presentation& p, const coset::CosetTable& t);

/// reidemeister_schreier followed by simplify().
Presentation subgroup_presentation(const Presentation& p, const coset::CosetTable& t,
                                   const SimplifyOptions& opt = {});

}  // namespace sextic
