#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sextic/catalog.hpp"
#include "sextic/derived_series.hpp"
#include "sextic/epimorphism.hpp"
#include "sextic/finite_group.hpp"
#include "sextic/metacyclic.hpp"
#include "sextic/pipeline.hpp"
#include "sextic/reidemeister_schreier.hpp"
#include "sextic/smith.hpp"
#include "oracles.hpp"

using namespace sextic;
using namespace sextic::testing;

namespace {

Presentation pres(const char* text) { return read_presentation(text); }

std::vector<mpz_class> torsion_ints(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  const IntMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(smith_normal_form(id).trivial());
  const IntMatrix d{{4, 0}, {0, 6}};
  CHECK(smith_normal_form(d).torsion == torsion_ints({2, 12}));
  const IntMatrix m{{2, 0}, {0, 2}, {5, 5}};
  const AbelianInvariants inv = smith_normal_form(m);
  CHECK(inv.torsion == torsion_ints({2}));
  CHECK(inv.free_rank == 0);
  CHECK(inv.format() == "C2");
  CHECK(smith_normal_form({}, 2).free_rank == 2);
  CHECK(smith_normal_form({}, 2).format() == "Z^2");
}

TEST_CASE("Smith normal form against the minor-gcd oracle on 100 random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, std::vector<mpz_class>(c));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const SmithForm sf = smith_form(m, c);
    const auto& diag = sf.diagonal;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] == 0) continue;
      REQUIRE(diag[i] != 0);
      CHECK(diag[i + 1] % diag[i] == 0);
    }
    const std::vector<mpz_class> oracle = minor_gcd_oracle(m, c);
    std::vector<mpz_class> nonzero;
    for (const auto& x : diag)
      if (x != 0) nonzero.push_back(x);
    CHECK(nonzero == oracle);
    const AbelianInvariants inv = sf.invariants();
    CHECK(inv.free_rank == c - oracle.size());
    std::vector<mpz_class> tors;
    for (const auto& x : oracle)
      if (x > 1) tors.push_back(x);
    CHECK(inv.torsion == tors);
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(pres("gens: a b\n[a,b]\na^5\n")).format() == "ZxC5");
  CHECK(abelianization(*catalog_entry("G_affine").presentation).format() == "Z");
  CHECK_FALSE(is_perfect(pres("gens: a b\na^2\nb^2\n(a b)^5\n")));
  CHECK(is_perfect(pres("gens: a\na\n")));
  CHECK(is_perfect(Presentation()));
}

TEST_CASE("Schreier transversal and Reidemeister-Schreier") {
  const Presentation d10 = pres("gens: a b\na^2\nb^2\n(a b)^5\n");
  const coset::CosetTable trivial = coset::enumerate(d10, {d10.parse("a"), d10.parse("b")});
  CHECK(schreier_transversal(trivial) == std::vector<Word>{Word()});

  const coset::CosetTable t = coset::enumerate(d10, {d10.parse("a")});
  const std::vector<Word> tr = schreier_transversal(t);
  CHECK(tr.size() == 5);
  for (std::size_t c = 0; c < tr.size(); ++c) {
    CHECK(t.trace(0, tr[c]) == static_cast<std::int32_t>(c));
    if (!tr[c].empty()) {
      const Word prefix(tr[c].letters().first(tr[c].size() - 1));
      CHECK(std::find(tr.begin(), tr.end(), prefix) != tr.end());
    }
  }

  const Presentation z = pres("gens: a\n");
  const coset::CosetTable t2 = coset::enumerate(z, {z.parse("a^2")});
  const SubgroupPresentation sp = reidemeister_schreier(z, t2);
  CHECK(sp.presentation.generator_count() == 1);
  CHECK(sp.presentation.relators().empty());
}

TEST_CASE("order multiplicativity on 10 presentation/subgroup pairs") {
  const auto pairs = rs_test_pairs();
  for (const auto& pr : pairs) {
    const Presentation p = pres(pr.text);
    std::vector<Word> h;
    for (const char* w : pr.subgroup) h.push_back(p.parse(w));
    const coset::CosetTable t = coset::enumerate(p, h);
    REQUIRE(t.complete());
    const Presentation sub = reidemeister_schreier(p, t).presentation;
    const Presentation sub_simple = subgroup_presentation(p, t);
    const std::uint64_t g = coset::group_order(p);
    CHECK(coset::group_order(sub) * t.size() == g);
    CHECK(coset::group_order(sub_simple) * t.size() == g);
  }
}

TEST_CASE("derived series of small groups") {
  const DerivedSeriesReport c6 = derived_series(pres("gens: a\na^6\n"));
  CHECK(c6.factors() == std::vector<std::string>{"C6"});
  CHECK(c6.stop == DerivedSeriesReport::Stop::trivial);

  const DerivedSeriesReport s4 = derived_series(
      pres("gens: a b\na^2\nb^3\n(a b)^4\n"), {10, {}, true});
  CHECK(s4.factors() == std::vector<std::string>{"C2", "C3", "C2^2"});
  CHECK(s4.order() == 24u);
  CHECK(s4.consistent);

  const DerivedSeriesReport a5 = derived_series(pres("gens: a b\na^2\nb^3\n(a b)^5\n"));
  CHECK(a5.factors() == std::vector<std::string>{"perfect:60"});
  CHECK(a5.stop == DerivedSeriesReport::Stop::perfect);

  CHECK_THROWS_AS(derived_subgroup_table(pres("gens: a b\n[a,b]\n")),
                  InfiniteAbelianizationError);
}

TEST_CASE("finite groups and normal subgroups") {
  const FiniteGroup d10 = dihedral_group(10);
  CHECK(d10.order() == 10);
  std::vector<std::size_t> sizes;
  for (const auto& n : normal_subgroups_small(d10)) sizes.push_back(n.size());
  CHECK(sizes == std::vector<std::size_t>{1, 5, 10});
  CHECK(d10.center().size() == 1);

  const FiniteGroup c6 = cyclic_group(6);
  CHECK(c6.abelian());
  CHECK(normal_subgroups_small(c6).size() == 4);

  const FiniteGroup gp = FiniteGroup::from_presentation(*catalog_entry("G_proj").presentation);
  CHECK(gp.order() == 30);
  CHECK(gp.center().size() == 3);
  CHECK_THROWS_AS(FiniteGroup::from_presentation(pres("gens: a\na^50\n"), 20), GuardError);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("epimorphisms") {
  const FiniteGroup d10 = dihedral_group(10);
  CHECK(find_epimorphisms(pres("gens: a\na^7\n"), d10).empty());
  const Presentation dp = pres("gens: r s\nr^5\ns^2\n(r s)^2\n");
  const auto epis = find_epimorphisms(dp, d10);
  CHECK(std::find(epis.begin(), epis.end(), d10.generators()) != epis.end());
  CHECK(epis.size() == 20);
  CHECK(has_epimorphism(*catalog_entry("G_proj").presentation, d10));
  CHECK_FALSE(has_epimorphism(pres("gens: a b\n[a,b]\n"), d10));
  CHECK(parse_target("dihedral:10").order() == 10);
  CHECK_THROWS_AS(parse_target("dihedral:7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("bogus"), std::invalid_argument);
}

TEST_CASE("metacyclic model for G_affine") {
  const MetacyclicElement a{1, 0}, b{1, 1};
  CHECK(metacyclic_mul(a, metacyclic_inv(a)) == MetacyclicElement{});
  CHECK(metacyclic_mul(b, a) == MetacyclicElement{2, 4});
  const MetacyclicReport r = verify_metacyclic_model(*catalog_entry("G_affine").presentation);
  CHECK(r.relators_hold);
  CHECK(r.surjective);
  CHECK(r.kernel_order == 5);
  CHECK(r.projective_order == 30u);
  CHECK(r.quotient_by_a2_order == 10u);
}
