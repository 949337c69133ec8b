#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sextic/braid.hpp"

using namespace sextic;
using namespace sextic::braid;

namespace {

std::vector<std::string> xnames(std::uint32_t n) {
  std::vector<std::string> v;
  for (std::uint32_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

Word x(std::uint32_t i) { return Word::generator(i - 1); }

BraidWord sig(std::uint32_t n, std::uint32_t i, int sign = 1) {
  return BraidWord(n, {{i, sign}});
}

bool same_action(const BraidWord& p, const BraidWord& q) {
  for (std::uint32_t j = 1; j <= p.strands(); ++j)
    if (apply_braid(p, x(j)) != apply_braid(q, x(j))) return false;
  return true;
}

Word product_of_generators(std::uint32_t n) {
  Word w;
  for (std::uint32_t j = 1; j <= n; ++j) w *= x(j);
  return w;
}

}  // namespace

TEST_CASE("single generator action") {
  CHECK(apply_braid(sig(2, 1), x(1)) == x(1) * x(2) * x(1).inverse());
  CHECK(apply_braid(sig(2, 1), x(2)) == x(1));
  const Word p = x(1) * x(2);
  CHECK(apply_braid(sig(2, 1).pow(2), x(1)) == p * x(1) * p.inverse());
  CHECK_THROWS_AS(apply_braid(sig(2, 1), x(3)), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(1), std::invalid_argument);
}

TEST_CASE("inverse letters undo the action") {
  std::mt19937 rng(3);
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (std::uint32_t i = 1; i < n; ++i) {
      const BraidWord b = sig(n, i) * sig(n, i, -1);
      for (std::uint32_t j = 1; j <= n; ++j) CHECK(apply_braid(b, x(j)) == x(j));
    }
}

TEST_CASE("braid relations hold as automorphisms for n <= 5") {
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (std::uint32_t i = 1; i < n; ++i)
      for (std::uint32_t k = i + 1; k < n; ++k) {
        const BraidWord si = sig(n, i), sk = sig(n, k);
        if (k == i + 1)
          CHECK(same_action(si * sk * si, sk * si * sk));
        else
          CHECK(same_action(si * sk, sk * si));
      }
  CHECK(apply_braid(parse_braid("s1 s2 s1", 3), x(3)) ==
        apply_braid(parse_braid("s2 s1 s2", 3), x(3)));
}

TEST_CASE("action fixes the product of the generators") {
  std::mt19937 rng(17);
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      std::vector<BraidLetter> ls;
      std::uniform_int_distribution<std::uint32_t> idx(1, n - 1);
      for (int m = 0; m < 8; ++m) ls.push_back({idx(rng), (rng() & 1) ? 1 : -1});
      CHECK(apply_braid(BraidWord(n, ls), product_of_generators(n)) == product_of_generators(n));
    }
}

TEST_CASE("full twist") {
  CHECK(full_twist(2).letters() == parse_braid("s1^2", 2).letters());
  CHECK(full_twist(3).size() == 6);
  CHECK(full_twist(4).size() == 12);
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const Word d = product_of_generators(n);
    for (std::uint32_t j = 1; j <= n; ++j)
      CHECK(apply_braid(full_twist(n), x(j)) == conjugate(x(j), d));
    CHECK(monodromy_at_infinity_check({full_twist(n)}, n));
    // Central: commutes with every Artin generator.
    for (std::uint32_t i = 1; i < n; ++i)
      CHECK(same_action(full_twist(n) * sig(n, i), sig(n, i) * full_twist(n)));
  }
  CHECK_FALSE(monodromy_at_infinity_check({sig(2, 1)}, 2));
  CHECK_FALSE(monodromy_at_infinity_check(
      {parse_braid("s1^3", 2), parse_braid("s1", 2), parse_braid("s1^2", 2)}, 2));
  CHECK(monodromy_at_infinity_check({parse_braid("s1^3", 2), parse_braid("s1", 2)}, 2, 2));
}

TEST_CASE("braid literals") {
  const BraidWord b = parse_braid("s1 s2^-1 s1^3", 3);
  CHECK(b.size() == 5);
  CHECK(parse_braid(format_braid(b), 3).letters() == b.letters());
  CHECK_THROWS(parse_braid("s3", 3));
}

TEST_CASE("van Kampen relators") {
  const auto names = xnames(2);
  const Word braid_rel = parse_word("x1 x2 x1 = x2 x1 x2", names).cyclic_canonical();
  const Presentation cusp = relations_from_braids({parse_braid("s1^3", 2)}, 2, false);
  REQUIRE_FALSE(cusp.relators().empty());
  for (const Word& r : cusp.relators()) CHECK(r.cyclic_canonical() == braid_rel);

  const Word tangency = parse_word("[x1 x2, x1]", names).cyclic_canonical();
  const Presentation tan = relations_from_braids({parse_braid("s1^2", 2)}, 2, false);
  REQUIRE_FALSE(tan.relators().empty());
  for (const Word& r : tan.relators()) CHECK(r.cyclic_canonical() == tangency);

  const Presentation inf = relations_from_braids({}, 4, true);
  REQUIRE(inf.relators().size() == 1);
  CHECK(inf.relators()[0] == product_of_generators(4).pow(2));
}
