#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/finite_group.hpp"
#include "sextic/presentation.hpp"

namespace sextic {

/// Dihedral group of order n (n even, n >= 2). Element i + (n/2) j is
/// r^i s^j; generators r, s.
FiniteGroup dihedral_group(std::uint32_t n);
/// Cyclic group of order n, element i = r^i.
FiniteGroup cyclic_group(std::uint32_t n);

/// Multiplication table text: one row of integers per element, element 0
/// the identity, '#' comments.
FiniteGroup read_group_table(std::string_view text);

/// "dihedral:n", "cyclic:n", or a path to a multiplication-table file.
/// Throws std::invalid_argument on malformed specs.
FiniteGroup parse_target(const std::string& spec);

/// Value of w in g given one image per generator.
std::uint32_t evaluate(const FiniteGroup& g, const std::vector<std::uint32_t>& images,
                       const Word& w);

struct EpimorphismOptions {
  /// Guard on |target| ^ generators.
  double max_search = 1e8;
  /// Stop after this many results (0: all).
  std::size_t max_results = 0;
};

/// All surjective homomorphisms P -> target, each as its generator images.
/// Throws GuardError when the search space exceeds the guard.
std::vector<std::vector<std::uint32_t>> find_epimorphisms(const Presentation& p,
                                                          const FiniteGroup& target,
                                                          const EpimorphismOptions& opt = {});

bool has_epimorphism(const Presentation& p, const FiniteGroup& target);

}  // namespace sextic
