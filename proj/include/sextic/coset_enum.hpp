#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/presentation.hpp"

namespace sextic::coset {

/// Thrown by operations that need a complete table when enumeration hit
/// the coset limit. Overflow means "raise the limit, or the index may be
/// infinite"; it never stands for a wrong answer.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(std::size_t limit)
      : std::runtime_error("coset enumeration overflow at " +
                           std::to_string(limit) +
                           " cosets (raise --max-cosets, or the index may be "
                           "infinite)"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

enum class Strategy {
  /// Relator-based (HLT): scan and fill every relator at each coset in turn,
  /// with a full lookahead pass and compaction whenever the limit is hit.
  hlt,
  /// Coset-table based (Felsch): define the first gap, then close all
  /// relator cycles through new entries via a deduction stack.
  felsch,
};

struct EnumerationLimits {
  std::size_t max_cosets = 1'000'000;
  Strategy strategy = Strategy::hlt;
};

enum class TableStatus { complete, overflow };

/// Action of the generators (and inverses) on the cosets of a subgroup.
/// Coset 0 is the subgroup itself. Column `2*g` holds the action of g and
/// column `2*g+1` that of g^-1, which matches Letter::code().
/// Complete tables are compacted and in standard (breadth-first) order.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable() = default;
  CosetTable(std::size_t generators, std::vector<std::int32_t> rows,
             TableStatus status);

  TableStatus status() const { return status_; }
  bool complete() const { return status_ == TableStatus::complete; }
  std::size_t generator_count() const { return gens_; }
  std::size_t column_count() const { return 2 * gens_; }
  /// Number of cosets (the index when complete).
  std::size_t size() const { return gens_ ? rows_.size() / (2 * gens_) : 1; }

  std::int32_t at(std::size_t coset, std::uint32_t column) const {
    return rows_[coset * 2 * gens_ + column];
  }
  std::int32_t act(std::size_t coset, Letter l) const { return at(coset, l.code()); }
  /// Follows w from `coset`; returns kUndefined if a gap is hit.
  std::int32_t trace(std::size_t coset, const Word& w) const;

  const std::vector<std::int32_t>& raw() const { return rows_; }

  /// Statistics of the run that produced this table.
  std::size_t max_live = 0;
  std::size_t total_defined = 0;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.gens_ == b.gens_ && a.status_ == b.status_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t gens_ = 0;
  std::vector<std::int32_t> rows_;
  TableStatus status_ = TableStatus::overflow;
};

/// Todd-Coxeter enumeration of the cosets of <subgroup_gens> in P.
/// Returns a table with status overflow (and no rows) if more than
/// `limits.max_cosets` cosets would be needed at once.
CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens,
                     const EnumerationLimits& limits = {});

/// |G| by enumeration over the trivial subgroup. Throws OverflowError.
std::uint64_t group_order(const Presentation& p, const EnumerationLimits& limits = {});

/// Index [G : <subgroup_gens>]. Throws OverflowError.
std::uint64_t subgroup_index(const Presentation& p, const std::vector<Word>& subgroup_gens,
                             const EnumerationLimits& limits = {});

/// Independent post-hoc check of a table: every generator column is a
/// permutation inverse to its partner column, every relator traces to a
/// closed loop from every coset, every subgroup generator fixes coset 0.
/// Returns an empty string on success, otherwise a description of the first
/// violation.
std::string verify_table(const CosetTable& t, const Presentation& p,
                         const std::vector<Word>& subgroup_gens);

/// Breadth-first renumbering of a complete table from coset 0 (visiting
/// columns in order). Cosets unreachable from 0 are dropped.
CosetTable standardize(const CosetTable& t);

/// A permutation of {0, ..., n-1} acting on the right: point i goes to p[i].
using Permutation = std::vector<std::int32_t>;

/// One permutation per generator, read from the table columns.
std::vector<Permutation> permutation_images(const CosetTable& t);

/// Image of a word under the permutation representation.
Permutation evaluate(const std::vector<Permutation>& gens, const Word& w);

}  // namespace sextic::coset
