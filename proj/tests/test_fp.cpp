#include <doctest.h>

#include <algorithm>
#include <random>

#include "sextic/catalog.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/presentation.hpp"
#include "sextic/word.hpp"

using namespace sextic;

namespace {

const std::vector<std::string> kAbcd{"a", "b", "c", "d"};

Word w(std::string_view s) { return parse_word(s, kAbcd); }

Word random_word(std::mt19937& rng, std::uint32_t gens, std::size_t len) {
  std::vector<Letter> ls;
  std::uniform_int_distribution<std::uint32_t> code(0, 2 * gens - 1);
  for (std::size_t i = 0; i < len; ++i) ls.push_back(Letter::from_code(code(rng)));
  return Word(ls);
}

// Least rotation of a cyclic word or its inverse, by brute force.
Word brute_canonical(const Word& x) {
  const Word c = x.cyclically_reduced();
  if (c.empty()) return c;
  Word best;
  bool first = true;
  for (const Word& base : {c, c.inverse()}) {
    std::vector<Letter> ls(base.letters().begin(), base.letters().end());
    for (std::size_t r = 0; r < ls.size(); ++r) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      Word cand(ls);
      if (first || cand < best) best = cand, first = false;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("free reduction and multiplication") {
  CHECK(w("a b") * w("b^-1 c") == w("a c"));
  const Word x = w("a b^-1 c d");
  CHECK((x * x.inverse()).is_identity());
  CHECK(w("a b") * w("a b") == w("a b a b"));
  CHECK((w("a b a b")).size() == 4);
}

TEST_CASE("inversion") {
  CHECK(Word().inverse().is_identity());
  CHECK(w("a b^-1").inverse() == w("b a^-1"));
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Word x = random_word(rng, 4, 12);
    CHECK(invert(invert(x)) == x);
  }
}

TEST_CASE("parse sugar") {
  CHECK(w("[b,d]") == w("b d b^-1 d^-1"));
  CHECK(w("(a b)^2 a") == w("a b a b a"));
  CHECK(w("a^-1 d a").size() == 3);
  CHECK(w("a b = b a") == w("a b a^-1 b^-1"));
  CHECK(w("1").is_identity());
  CHECK_THROWS_AS(w("e"), std::invalid_argument);
  CHECK_THROWS_AS(w("a^"), std::invalid_argument);
}

TEST_CASE("format round trip") {
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Word x = random_word(rng, 4, 15);
    CHECK(parse_word(format_word(x, kAbcd), kAbcd) == x);
  }
}

TEST_CASE("cyclic canonical form matches brute force") {
  std::mt19937 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const Word x = random_word(rng, 3, 1 + k % 17);
    REQUIRE(x.cyclic_canonical() == brute_canonical(x));
  }
}

TEST_CASE("presentation text format") {
  const Presentation p = read_presentation("# comment\ngens: r s\nr^5\n\ns^2\n(r s)^2\n");
  CHECK(p.generator_count() == 2);
  CHECK(p.relators().size() == 3);
  CHECK(read_presentation(write_presentation(p)) == p);
  CHECK_THROWS(read_presentation("r^5\n"));
}

TEST_CASE("relators are stored cyclically reduced") {
  Presentation p({"a", "b"});
  p.add_relator("b a^3 b^-1");
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == parse_word("a^3", p.generator_names()));
  p.add_relator("a a^-1");
  CHECK(p.relators().size() == 1);
}

TEST_CASE("simplify keeps the group order") {
  const Presentation d10 = read_presentation("gens: a b c\na^2\nb^2\n(a b)^5\nc = a b\n");
  const Presentation s = simplify(d10);
  CHECK(s.generator_count() <= 2);
  CHECK(coset::group_order(s) == 10);
  CHECK(coset::group_order(deduplicate(d10)) == 10);
}

TEST_CASE("catalog") {
  CHECK(d10_family_names().size() == 8);
  const CatalogEntry& e = catalog_entry("4A4+2A1");
  REQUIRE(e.presentation);
  CHECK(e.presentation->generator_count() == 4);
  CHECK(e.groups.size() == 7);

  const CatalogEntry& a9 = catalog_entry("A9+2A4+A2");
  const auto& names = a9.presentation->generator_names();
  CHECK(expand_printed("[a b, D1]", names) ==
        commutator(parse_word("a b", names), parse_word("(g d g) d (g d g)^-1", names)));

  const CatalogEntry& ga = catalog_entry("G_affine");
  CHECK(ga.presentation->generator_count() == 2);
  CHECK(ga.presentation->relators().size() == 2);
  CHECK_FALSE(ga.expected.order);

  std::vector<std::string> seen;
  for (const CatalogEntry& c : catalog()) {
    CHECK(std::find(seen.begin(), seen.end(), c.name) == seen.end());
    seen.push_back(c.name);
    if (c.presentation)
      for (const Word& r : c.presentation->relators())
        CHECK(r.generator_bound() <= c.presentation->generator_count());
  }
  CHECK_THROWS_AS(catalog_entry("nope"), std::out_of_range);
}
