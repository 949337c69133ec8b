#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sextic/coset_enum.hpp"
#include "sextic/presentation.hpp"

namespace sextic {

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A small finite group as a full multiplication table. Element 0 is the
/// identity.
class FiniteGroup {
 public:
  /// Table must be a Latin square with identity 0, associative, and
  /// generated by `generators` (all elements when empty).
  /// Throws std::invalid_argument otherwise.
  explicit FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                       std::vector<std::uint32_t> generators = {});

  /// Regular representation of a finite presentation. Element i is coset i
  /// of the trivial subgroup; generator images are recorded, and element
  /// words are available from words(). Throws GuardError if |G| > max_order.
  static FiniteGroup from_presentation(const Presentation& p, std::size_t max_order = 2000,
                                       const coset::EnumerationLimits& limits = {});

  std::size_t order() const { return mul_.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t by) const {
    return mul(mul(by, a), inv(by));
  }
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  /// Words for elements, when built from a presentation (else empty).
  const std::vector<Word>& words() const { return words_; }
  const std::vector<std::vector<std::uint32_t>>& table() const { return mul_; }

  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const;
  /// Sorted list of the subgroup generated by `elems`.
  std::vector<std::uint32_t> subgroup(const std::vector<std::uint32_t>& elems) const;
  std::vector<std::uint32_t> normal_closure(const std::vector<std::uint32_t>& elems) const;
  std::vector<std::uint32_t> center() const;
  std::uint64_t element_order(std::uint32_t a) const;
  bool abelian() const;

 private:
  std::vector<std::vector<std::uint32_t>> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> gens_;
  std::vector<Word> words_;
};

/// All normal subgroups (sorted element lists), ordered by size, from
/// joins of normal closures of conjugacy classes. Throws GuardError above
/// max_order.
std::vector<std::vector<std::uint32_t>> normal_subgroups_small(const FiniteGroup& g,
                                                               std::size_t max_order = 2000);

}  // namespace sextic
