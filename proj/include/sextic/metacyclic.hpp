#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sextic/coset_enum.hpp"
#include "sextic/presentation.hpp"

namespace sextic {

/// Element (n, k) of Z x| Z5, where the generator of Z inverts Z5:
/// (n, k)(m, l) = (n + m, (-1)^m k + l mod 5).
struct MetacyclicElement {
  long n = 0;
  int k = 0;
  friend bool operator==(MetacyclicElement, MetacyclicElement) = default;
};

MetacyclicElement metacyclic_mul(MetacyclicElement x, MetacyclicElement y);
MetacyclicElement metacyclic_inv(MetacyclicElement x);
/// Value of w under the given images of the generators.
MetacyclicElement metacyclic_eval(const std::vector<MetacyclicElement>& images, const Word& w);

struct MetacyclicReport {
  /// Every relator of P maps to the identity under a -> (1,0), b -> (1,1).
  bool relators_hold = false;
  /// Images generate the model (they reach (0,1) and (1,0)).
  bool surjective = false;
  /// Order of the subgroup of the model generated by b a^-1 and its
  /// conjugates (the kernel of the map to Z).
  std::size_t kernel_order = 0;
  /// |G / <<(a b^2)^2>>| by coset enumeration (30 expected).
  std::optional<std::uint64_t> projective_order;
  /// |G / <<a^2>>| by coset enumeration, matching the model's quotient by
  /// the central subgroup generated by (2,0) (10 expected).
  std::optional<std::uint64_t> quotient_by_a2_order;
  std::vector<std::string> lines;
};

/// Checks of the Z x| Z5 model for a two-generator presentation in a, b.
MetacyclicReport verify_metacyclic_model(const Presentation& p,
                                         const coset::EnumerationLimits& limits = {});

}  // namespace sextic
