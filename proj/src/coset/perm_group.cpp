#include "sextic/perm_group.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace sextic::coset {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: degrees differ");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<std::int32_t>(i);
  return out;
}

std::vector<Word> coset_representatives(const CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("coset_representatives needs a complete table");
  std::vector<Word> reps(t.size());
  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t c = order[i];
    for (std::uint32_t x = 0; x < t.column_count(); ++x) {
      const auto d = static_cast<std::size_t>(t.at(c, x));
      if (seen[d]) continue;
      seen[d] = true;
      reps[d] = reps[c] * Word{Letter::from_code(x)};
      order.push_back(d);
    }
  }
  return reps;
}

bool is_central(const CosetTable& regular, const Word& w) {
  const std::int32_t p = regular.trace(0, w);
  if (p == CosetTable::kUndefined) throw std::invalid_argument("is_central: incomplete table");
  for (std::uint32_t g = 0; g < regular.generator_count(); ++g) {
    // w x = x w  iff  tracing w from the coset of x lands on the coset of w x.
    const std::int32_t x = regular.at(0, 2 * g);
    if (regular.trace(static_cast<std::size_t>(x), w) != regular.at(static_cast<std::size_t>(p), 2 * g))
      return false;
  }
  return true;
}

std::vector<std::size_t> center_elements(const CosetTable& regular) {
  const std::vector<Word> reps = coset_representatives(regular);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < reps.size(); ++p)
    if (is_central(regular, reps[p])) out.push_back(p);
  return out;
}

std::optional<std::uint64_t> generated_order(const std::vector<Permutation>& gens,
                                             std::uint64_t limit) {
  if (gens.empty()) return 1;
  std::set<Permutation> seen{identity_permutation(gens.front().size())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& e : frontier)
      for (const Permutation& g : gens) {
        Permutation h = compose(e, g);
        if (seen.insert(h).second) {
          if (seen.size() > limit) return std::nullopt;
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace sextic::coset
