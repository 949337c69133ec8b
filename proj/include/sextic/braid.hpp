#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/presentation.hpp"
#include "sextic/word.hpp"

namespace sextic::braid {

/// Artin generator sigma_i (1-based) or its inverse.
struct BraidLetter {
  std::uint32_t index;
  int sign;
  friend bool operator==(BraidLetter, BraidLetter) = default;
};

class BraidWord {
 public:
  /// Throws std::invalid_argument if strands < 2 or an index is out of range.
  explicit BraidWord(std::uint32_t strands, std::vector<BraidLetter> letters = {});

  std::uint32_t strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord pow(unsigned n) const;

 private:
  std::uint32_t strands_;
  std::vector<BraidLetter> letters_;
};

/// Parses `s1 s2^-1 s1^3` style literals.
BraidWord parse_braid(std::string_view text, std::uint32_t strands);
std::string format_braid(const BraidWord& b);

/// Image of w under the free-group automorphism of b, letters applied left
/// to right (a right action: w.(b1 b2) = (w.b1).b2). sigma_i sends
/// x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i; generators are 0-based in
/// the word, so sigma_1 moves x_0 and x_1.
/// Throws std::invalid_argument if w uses a generator >= b.strands().
Word apply_braid(const BraidWord& b, const Word& w);

/// Delta^2 = (sigma_1 ... sigma_{n-1})^n.
BraidWord full_twist(std::uint32_t n);

/// Van Kampen relators m(x_j) x_j^-1 for every braid m and every strand j,
/// plus (x_1 ... x_n)^2 when include_infinity is set. With
/// drop_one_braid the relators of the last braid are omitted; they follow
/// from the others once the infinity relator holds.
Presentation relations_from_braids(const std::vector<BraidWord>& braids,
                                   std::uint32_t n, bool include_infinity,
                                   bool drop_one_braid = false);

/// True iff the composite of all braids (in order) acts on every generator
/// as conjugation by (x_1 ... x_n)^power. power = 1 is the full twist
/// (monodromy at infinity in the plane); the fibration of Sigma_2 has
/// power = 2.
bool monodromy_at_infinity_check(const std::vector<BraidWord>& braids,
                                 std::uint32_t n, int power = 1);

}  // namespace sextic::braid
