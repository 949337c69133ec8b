#include <doctest.h>

#include <algorithm>
#include <random>

#include "sextic/catalog.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/perm_group.hpp"
#include "sextic/pipeline.hpp"

using namespace sextic;
using namespace sextic::coset;

namespace {

Presentation d10() { return read_presentation("gens: a b\na^2\nb^2\n(a b)^5\n"); }

std::uint64_t perm_order(const Permutation& p) {
  std::uint64_t k = 1;
  Permutation q = p;
  while (q != identity_permutation(p.size())) q = compose(q, p), ++k;
  return k;
}

}  // namespace

TEST_CASE("dihedral group of order 10") {
  const Presentation p = d10();
  for (Strategy s : {Strategy::hlt, Strategy::felsch}) {
    const CosetTable t = enumerate(p, {}, {1000, s});
    REQUIRE(t.complete());
    CHECK(t.size() == 10);
    CHECK(verify_table(t, p, {}).empty());
    const auto perms = permutation_images(t);
    REQUIRE(perms.size() == 2);
    CHECK(perm_order(perms[0]) == 2);
    CHECK(perm_order(perms[1]) == 2);
    CHECK(perm_order(compose(perms[0], perms[1])) == 5);
    for (const Word& r : p.relators())
      CHECK(evaluate(perms, r) == identity_permutation(10));
  }
  CHECK(center_elements(enumerate(p, {})).size() == 1);
}

TEST_CASE("subgroup index") {
  const Presentation p = d10();
  CHECK(subgroup_index(p, {p.parse("a")}) == 5);
  CHECK(subgroup_index(p, {p.parse("a b")}) == 2);
  CHECK(subgroup_index(p, {p.parse("a"), p.parse("b")}) == 1);
  const CosetTable t = enumerate(p, {p.parse("a")});
  CHECK(verify_table(t, p, {p.parse("a")}).empty());
  CHECK(coset_representatives(t).size() == 5);
}

TEST_CASE("abelian groups have every element central") {
  const Presentation c6 = read_presentation("gens: a\na^6\n");
  CHECK(center_elements(enumerate(c6, {})).size() == 6);
  const Presentation c2c3 = read_presentation("gens: a b\na^2\nb^3\n[a,b]\n");
  const CosetTable t = enumerate(c2c3, {});
  CHECK(t.size() == 6);
  CHECK(center_elements(t).size() == 6);
  CHECK(is_central(t, c2c3.parse("a")));
}

TEST_CASE("determinism and input-order independence") {
  const Presentation p = *catalog_entry("G_proj").presentation;
  const CosetTable t1 = enumerate(p, {});
  const CosetTable t2 = enumerate(p, {});
  REQUIRE(t1.complete());
  CHECK(t1 == t2);
  CHECK(t1.size() == 30);

  std::mt19937 rng(1);
  for (int k = 0; k < 5; ++k) {
    std::vector<Word> rels = p.relators();
    std::shuffle(rels.begin(), rels.end(), rng);
    const Presentation q(p.generator_names(), rels);
    for (Strategy s : {Strategy::hlt, Strategy::felsch}) {
      const CosetTable t = enumerate(q, {}, {1'000'000, s});
      REQUIRE(t.complete());
      CHECK(t.size() == 30);
      CHECK(verify_table(t, p, {}).empty());
      CHECK(standardize(t) == t);
    }
  }
}

TEST_CASE("strategies agree") {
  const std::vector<std::string> texts{
      "gens: a b\na^2\nb^3\n(a b)^5\n",
      "gens: a b\na^3\nb^3\n(a b)^3\n[a,b]^2\n",
      "gens: x y\nx^4\ny^2 = x^2\ny x y^-1 x\n",
  };
  for (const auto& s : texts) {
    const Presentation p = read_presentation(s);
    const CosetTable h = enumerate(p, {}, {100000, Strategy::hlt});
    const CosetTable f = enumerate(p, {}, {100000, Strategy::felsch});
    REQUIRE(h.complete());
    REQUIRE(f.complete());
    CHECK(h.size() == f.size());
    CHECK(standardize(h) == standardize(f));
  }
  CHECK(group_order(read_presentation(texts[0])) == 60);
  CHECK(group_order(read_presentation(texts[2])) == 8);
}

TEST_CASE("overflow is reported, never a wrong answer") {
  const Presentation ga = *catalog_entry("G_affine").presentation;
  const CosetTable t = enumerate(ga, {}, {100000, Strategy::hlt});
  CHECK(t.status() == TableStatus::overflow);
  CHECK_THROWS_AS(group_order(ga, {100000}), OverflowError);
  const Presentation free1 = read_presentation("gens: a\n");
  CHECK_THROWS_AS(group_order(free1, {1000}), OverflowError);
}

TEST_CASE("G_proj has order 30 and center of order 3") {
  const Presentation p = *catalog_entry("G_proj").presentation;
  CHECK(group_order(p) == 30);
  const CosetTable t = enumerate(p, {});
  CHECK(generated_order(permutation_images(t)) == 30u);
  CHECK(center_elements(t).size() == 3);
}

TEST_CASE("Pi(4A4+2A1) modulo delta^2 has 1920 elements") {
  const CatalogEntry& e = catalog_entry("4A4+2A1");
  Presentation p = *e.presentation;
  p.add_relator(Word::generator(*e.delta).pow(2));
  CHECK(group_order(p) == 1920);
}
