#include "sextic/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sextic {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator(std::uint32_t g, int sign) {
  Word w;
  w.letters_.push_back(Letter(g, sign));
  return w;
}

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, l.generator() + 1);
  return bound;
}

long Word::exponent_sum(std::uint32_t g) const {
  long s = 0;
  for (Letter l : letters_)
    if (l.generator() == g) s += l.sign();
  return s;
}

std::size_t Word::occurrences(std::uint32_t g) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(),
      [g](Letter l) { return l.generator() == g; }));
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word result;
  for (long k = std::labs(n); k > 0; --k) result *= base;
  return result;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<long>(lo),
                    letters_.begin() + static_cast<long>(hi));
  return w;
}

namespace {

// Booth's least-rotation algorithm.
std::vector<Letter> min_rotation(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  if (n < 2) return v;
  auto at = [&](std::size_t i) { return v[i % n].code(); };
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && at(j) != at(k)) {
      if (at(j) < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(v[(k + i) % n]);
  return out;
}

}  // namespace

Word Word::cyclic_canonical() const {
  Word r = cyclically_reduced();
  Word ri = r.inverse();
  Word out;
  auto a = min_rotation(r.letters_);
  auto b = min_rotation(ri.letters_);
  out.letters_ = std::min(a, b);
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t k = 0;
  while (k < rhs.letters_.size() && !letters_.empty() &&
         letters_.back() == rhs.letters_[k].inverse()) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<long>(k),
                  rhs.letters_.end());
  return *this;
}

Word multiply(const Word& w1, const Word& w2) { return w1 * w2; }
Word invert(const Word& w) { return w.inverse(); }

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

Word conjugate(const Word& w, const Word& by) {
  return by * w * by.inverse();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {
    order_.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return names_[a].size() > names_[b].size();
                     });
  }

  Word relation() {
    Word lhs = product();
    skip_blanks();
    if (peek() == '=') {
      ++pos_;
      Word rhs = product();
      lhs = lhs * rhs.inverse();
    }
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected character");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_word: " + what + " at position " +
                                std::to_string(pos_) + " in \"" +
                                std::string(text_) + "\"");
  }

  void skip_blanks() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '*'))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool at_factor_start() {
    skip_blanks();
    char c = peek();
    if (c == '(' || c == '[' || c == '1' || c == '_' ||
        std::isalpha(static_cast<unsigned char>(c)))
      return true;
    for (const std::string& name : names_)
      if (!name.empty() && text_.substr(pos_, name.size()) == name)
        return true;
    return false;
  }

  Word product() {
    Word w;
    while (at_factor_start()) w *= power();
    return w;
  }

  Word power() {
    Word base = atom();
    skip_blanks();
    while (peek() == '^') {
      ++pos_;
      skip_blanks();
      base = base.pow(exponent());
      skip_blanks();
    }
    return base;
  }

  long exponent() {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("malformed exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return sign * value;
  }

  Word atom() {
    skip_blanks();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = product();
      skip_blanks();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word x = product();
      skip_blanks();
      if (peek() != ',') fail("missing ',' in commutator");
      ++pos_;
      Word y = product();
      skip_blanks();
      if (peek() != ']') fail("missing ']'");
      ++pos_;
      return commutator(x, y);
    }
    for (std::size_t idx : order_) {
      const std::string& name = names_[idx];
      if (!name.empty() && text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return Word::generator(static_cast<std::uint32_t>(idx));
      }
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    fail("unknown symbol");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> names) {
  return WordParser(text, names).relation();
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    long run = static_cast<long>(j - i) * letters[i].sign();
    if (!out.empty()) out += ' ';
    std::uint32_t g = letters[i].generator();
    out += g < names.size() ? names[g] : "x" + std::to_string(g);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace sextic
