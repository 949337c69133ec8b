#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sextic {

/// One letter of a free-group word: a generator index together with a sign.
///
/// Letters are packed as `2 * generator + (inverted ? 1 : 0)`. The same code
/// doubles as the column index of a coset table, so the enumerator consumes
/// relators without translation.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, int sign)
      : code_(2 * generator + (sign < 0 ? 1U : 0U)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1U) ? -1 : 1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1U); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

/// Freely reduced word in a free group. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Builds the free reduction of the given letter sequence.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(std::uint32_t g, int sign = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index used plus one (0 for the identity).
  std::uint32_t generator_bound() const;
  /// Signed number of occurrences of generator g.
  long exponent_sum(std::uint32_t g) const;
  /// Unsigned number of occurrences of generator g.
  std::size_t occurrences(std::uint32_t g) const;

  Word inverse() const;
  Word pow(long n) const;
  Word cyclically_reduced() const;
  /// Smallest rotation of the cyclic reduction of this word or its inverse.
  /// Two relators have equal canonical forms iff they define the same
  /// normal-closure generator up to conjugation and inversion.
  Word cyclic_canonical() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Free product with cancellation. Same as `w1 * w2`.
Word multiply(const Word& w1, const Word& w2);
Word invert(const Word& w);
/// [x,y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);
/// by * w * by^-1.
Word conjugate(const Word& w, const Word& by);

/// Parse a word written with generator names, juxtaposition (optionally
/// separated by blanks or `*`), integer powers `^n` / `^-n`, parentheses,
/// commutators `[u,v]`, the literal `1` for the identity, and at most one
/// `=` (a relation `lhs = rhs` is read as the relator `lhs rhs^-1`).
///
/// Names are matched greedily (longest name first), so with generators
/// `a b` the text `ab` reads as `a b`.
///
/// Throws std::invalid_argument on unknown symbols or malformed exponents.
Word parse_word(std::string_view text, std::span<const std::string> names);

/// Canonical printed form: blanks between syllables, maximal runs of one
/// letter collapsed to `x^n`. parse_word(format_word(w)) == w.
std::string format_word(const Word& w, std::span<const std::string> names);

}  // namespace sextic
