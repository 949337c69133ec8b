#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/word.hpp"

namespace sextic {

/// Finitely presented group: generator names plus cyclically reduced
/// relators. Identity relators are dropped on insertion.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> generator_names);
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators);

  /// Throws std::invalid_argument if w mentions an unknown generator.
  void add_relator(const Word& w);
  /// Parses `text` with parse_word and adds the result.
  void add_relator(std::string_view text);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t total_length() const;

  /// Generator index by name; throws std::out_of_range if absent.
  std::uint32_t generator_index(std::string_view name) const;
  Word parse(std::string_view text) const { return parse_word(text, names_); }
  std::string format(const Word& w) const { return format_word(w, names_); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Tietze clean-up applied after rewriting: free and cyclic reduction,
/// removal of trivial and duplicate relators (up to rotation and inversion),
/// then repeated elimination of a generator occurring exactly once in some
/// relator, preferring the substitution that grows the presentation least,
/// interleaved with shorten_relators() passes.
/// Elimination stops once the total relator length would exceed
/// `length_limit`.
struct SimplifyOptions {
  bool eliminate_generators = true;
  /// 0: max(expand_limit * initial length, min_length_limit).
  std::size_t length_limit = 0;
  double expand_limit = 1.5;
  std::size_t min_length_limit = 500;
  /// Each further round restarts the length budget from the current size.
  unsigned rounds = 1;
  /// Generator indices that must survive elimination.
  std::vector<std::uint32_t> keep;
  /// Interleave shorten_relators() with the eliminations.
  bool search = true;
  std::size_t max_tool_length = 48;
};

Presentation simplify(const Presentation& p, const SimplifyOptions& opt = {});

/// Substring search: where more than half of (a cyclic conjugate of) a
/// relator r of length <= max_tool_length occurs in another relator s,
/// replace that piece of s by the inverse of the rest of r. Every rewrite
/// shortens s; relators that become trivial are dropped.
Presentation shorten_relators(const Presentation& p, std::size_t max_tool_length = 48);

/// Removes duplicate relators (same canonical cyclic form) and trivial ones,
/// keeping first occurrences in order.
Presentation deduplicate(const Presentation& p);

/// Eliminates generator g via a relator in which it occurs exactly once.
/// Throws std::invalid_argument if no such relator exists.
Presentation eliminate_generator(const Presentation& p, std::uint32_t g);

// Text format:
//   gens: a b g d
//   <one relator per line>
// '#' starts a comment; blank lines are ignored.
Presentation read_presentation(std::string_view text);
Presentation read_presentation_file(const std::string& path);
std::string write_presentation(const Presentation& p);

}  // namespace sextic
