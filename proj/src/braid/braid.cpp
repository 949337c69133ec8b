#include "sextic/braid.hpp"

#include <cctype>
#include <stdexcept>

namespace sextic::braid {

BraidWord::BraidWord(std::uint32_t strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw std::invalid_argument("braid needs >= 2 strands");
  for (BraidLetter l : letters_)
    if (l.index < 1 || l.index >= strands_ || (l.sign != 1 && l.sign != -1))
      throw std::invalid_argument("braid letter s" + std::to_string(l.index) +
                                  " out of range for " +
                                  std::to_string(strands_) + " strands");
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_)
    throw std::invalid_argument("braid strand counts differ");
  auto letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::pow(unsigned n) const {
  BraidWord out(strands_);
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

BraidWord parse_braid(std::string_view text, std::uint32_t strands) {
  std::vector<BraidLetter> letters;
  std::size_t i = 0;
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("parse_braid: ") + what + " in \"" +
                                std::string(text) + "\"");
  };
  auto number = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("expected a number");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 's') fail("expected 's'");
    ++i;
    long index = number();
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      int sign = 1;
      if (i < text.size() && text[i] == '-') {
        sign = -1;
        ++i;
      }
      power = sign * number();
    }
    for (long k = 0; k < std::labs(power); ++k)
      letters.push_back({static_cast<std::uint32_t>(index), power < 0 ? -1 : 1});
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  const auto& ls = b.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(ls[i].index);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace {

// Images of all generators under one Artin letter.
std::vector<Word> letter_images(std::uint32_t n, BraidLetter l) {
  std::vector<Word> img(n);
  for (std::uint32_t j = 0; j < n; ++j) img[j] = Word::generator(j);
  const std::uint32_t i = l.index - 1;
  const Word xi = Word::generator(i), xj = Word::generator(i + 1);
  if (l.sign > 0) {
    img[i] = xi * xj * xi.inverse();
    img[i + 1] = xi;
  } else {
    img[i] = xj;
    img[i + 1] = xj.inverse() * xi * xj;
  }
  return img;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter l : w.letters())
    out *= l.sign() > 0 ? images[l.generator()]
                        : images[l.generator()].inverse();
  return out;
}

}  // namespace

Word apply_braid(const BraidWord& b, const Word& w) {
  if (w.generator_bound() > b.strands())
    throw std::invalid_argument("word uses a generator beyond the strands");
  Word cur = w;
  for (BraidLetter l : b.letters())
    cur = substitute(cur, letter_images(b.strands(), l));
  return cur;
}

BraidWord full_twist(std::uint32_t n) {
  std::vector<BraidLetter> row;
  for (std::uint32_t i = 1; i < n; ++i) row.push_back({i, 1});
  return BraidWord(n, row).pow(n);
}

namespace {

std::vector<std::string> strand_names(std::uint32_t n) {
  std::vector<std::string> names;
  for (std::uint32_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

Word boundary_word(std::uint32_t n) {
  Word p;
  for (std::uint32_t j = 0; j < n; ++j) p *= Word::generator(j);
  return p;
}

}  // namespace

Presentation relations_from_braids(const std::vector<BraidWord>& braids,
                                   std::uint32_t n, bool include_infinity,
                                   bool drop_one_braid) {
  Presentation p(strand_names(n));
  std::size_t count = braids.size();
  if (drop_one_braid && count > 0) --count;
  for (std::size_t k = 0; k < count; ++k) {
    if (braids[k].strands() != n)
      throw std::invalid_argument("braid strand count differs from n");
    for (std::uint32_t j = 0; j < n; ++j) {
      Word x = Word::generator(j);
      p.add_relator(apply_braid(braids[k], x) * x.inverse());
    }
  }
  if (include_infinity) p.add_relator(boundary_word(n).pow(2));
  return p;
}

bool monodromy_at_infinity_check(const std::vector<BraidWord>& braids,
                                 std::uint32_t n, int power) {
  BraidWord total(n);
  for (const BraidWord& b : braids) total = total * b;
  const Word conj = boundary_word(n).pow(power);
  for (std::uint32_t j = 0; j < n; ++j) {
    Word x = Word::generator(j);
    if (apply_braid(total, x) != conjugate(x, conj)) return false;
  }
  return true;
}

}  // namespace sextic::braid
