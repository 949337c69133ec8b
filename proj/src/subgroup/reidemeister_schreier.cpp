#include "sextic/reidemeister_schreier.hpp"

#include <stdexcept>

#include "sextic/perm_group.hpp"

namespace sextic {

std::vector<Word> schreier_transversal(const coset::CosetTable& t) {
  return coset::coset_representatives(t);
}

SubgroupPresentation reidemeister_schreier(const Presentation& p, const coset::CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("reidemeister_schreier needs a complete table");
  if (t.generator_count() != p.generator_count())
    throw std::invalid_argument("table and presentation disagree on generators");
  const std::size_t n = t.size(), gens = p.generator_count();

  // Tree edges of the breadth-first search used by the transversal.
  std::vector<bool> tree(n * gens, false);
  {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> order{0};
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::size_t c = order[i];
      for (std::uint32_t x = 0; x < t.column_count(); ++x) {
        const auto d = static_cast<std::size_t>(t.at(c, x));
        if (seen[d]) continue;
        seen[d] = true;
        order.push_back(d);
        const std::size_t g = x / 2;
        tree[(x % 2 == 0 ? c : d) * gens + g] = true;
      }
    }
  }
  const std::vector<Word> reps = schreier_transversal(t);

  std::vector<std::int32_t> index(n * gens, -1);
  SubgroupPresentation out;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      if (tree[c * gens + g]) continue;
      index[c * gens + g] = static_cast<std::int32_t>(names.size());
      names.push_back("s" + std::to_string(names.size()));
      const auto d = static_cast<std::size_t>(t.at(c, static_cast<std::uint32_t>(2 * g)));
      out.generator_words.push_back(reps[c] * Word::generator(static_cast<std::uint32_t>(g)) *
                                    reps[d].inverse());
    }
  out.presentation = Presentation(names);

  for (const Word& r : p.relators())
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Letter> letters;
      std::size_t e = c;
      for (Letter l : r.letters()) {
        const std::size_t g = l.generator();
        if (l.sign() > 0) {
          if (std::int32_t s = index[e * gens + g]; s >= 0)
            letters.emplace_back(static_cast<std::uint32_t>(s), 1);
          e = static_cast<std::size_t>(t.act(e, l));
        } else {
          const auto f = static_cast<std::size_t>(t.act(e, l));
          if (std::int32_t s = index[f * gens + g]; s >= 0)
            letters.emplace_back(static_cast<std::uint32_t>(s), -1);
          e = f;
        }
      }
      if (e != c) throw std::logic_error("relator does not close in the coset table");
      out.presentation.add_relator(Word(letters));
    }
  return out;
}

Presentation subgroup_presentation(const Presentation& p, const coset::CosetTable& t,
                                   const SimplifyOptions& opt) {
  return simplify(reidemeister_schreier(p, t).presentation, opt);
}

}  // namespace sextic
