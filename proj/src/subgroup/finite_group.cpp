#include "sextic/finite_group.hpp"

#include <algorithm>
#include <set>

#include "sextic/perm_group.hpp"

namespace sextic {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                         std::vector<std::uint32_t> generators)
    : mul_(std::move(table)), gens_(std::move(generators)) {
  const std::size_t n = mul_.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& r : mul_) {
    if (r.size() != n) throw std::invalid_argument("group table is not square");
    std::vector<bool> seen(n, false);
    for (auto x : r) {
      if (x >= n || seen[x]) throw std::invalid_argument("group table row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (mul_[0][a] != a || mul_[a][0] != a) throw std::invalid_argument("element 0 is not the identity");
  for (auto g : gens_)
    if (g >= n) throw std::invalid_argument("generator out of range");
  if (gens_.empty())
    for (std::uint32_t a = 1; a < n; ++a) gens_.push_back(a);
  if (subgroup(gens_).size() != n) throw std::invalid_argument("generators do not generate");
  // Light's test: checking (x g) y = x (g y) for generators g suffices.
  for (auto g : gens_)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t c = 0; c < n; ++c)
        if (mul_[mul_[a][g]][c] != mul_[a][mul_[g][c]])
          throw std::invalid_argument("group table is not associative");
  inv_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul_[a][b] == 0) inv_[a] = b;
}

FiniteGroup FiniteGroup::from_presentation(const Presentation& p, std::size_t max_order,
                                           const coset::EnumerationLimits& limits) {
  coset::EnumerationLimits lim = limits;
  lim.max_cosets = std::min(lim.max_cosets, std::max<std::size_t>(16 * max_order, 1000));
  coset::CosetTable t = coset::enumerate(p, {}, lim);
  if (!t.complete()) throw GuardError("group too large or enumeration overflowed");
  const std::size_t n = t.size();
  if (n > max_order) throw GuardError("group order " + std::to_string(n) + " exceeds guard");
  std::vector<Word> words = coset::coset_representatives(t);
  // a * b: follow b's word from coset a.
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a][b] = static_cast<std::uint32_t>(t.trace(a, words[b]));
  std::vector<std::uint32_t> gens;
  for (std::uint32_t g = 0; g < p.generator_count(); ++g)
    gens.push_back(static_cast<std::uint32_t>(t.at(0, 2 * g)));
  FiniteGroup out(std::move(mul), std::move(gens));
  out.words_ = std::move(words);
  return out;
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> done(order(), false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t a = 0; a < order(); ++a) {
    if (done[a]) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t g = 0; g < order(); ++g) cls.insert(conj(a, g));
    for (auto x : cls) done[x] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<std::uint32_t> FiniteGroup::subgroup(const std::vector<std::uint32_t>& elems) const {
  std::vector<bool> in(order(), false);
  std::vector<std::uint32_t> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : elems) {
      const auto h = mul(list[i], g);
      if (!in[h]) {
        in[h] = true;
        list.push_back(h);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<std::uint32_t> FiniteGroup::normal_closure(const std::vector<std::uint32_t>& elems) const {
  std::set<std::uint32_t> conjugates;
  for (auto a : elems)
    for (std::uint32_t g = 0; g < order(); ++g) conjugates.insert(conj(a, g));
  return subgroup({conjugates.begin(), conjugates.end()});
}

std::vector<std::uint32_t> FiniteGroup::center() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < order(); ++a) {
    bool central = true;
    for (auto g : gens_)
      if (mul(a, g) != mul(g, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

std::uint64_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::abelian() const { return center().size() == order(); }

std::vector<std::vector<std::uint32_t>> normal_subgroups_small(const FiniteGroup& g,
                                                               std::size_t max_order) {
  if (g.order() > max_order) throw GuardError("group order exceeds normal-subgroup guard");
  std::set<std::vector<std::uint32_t>> found{{0}};
  std::vector<std::vector<std::uint32_t>> minimal;
  for (const auto& cls : g.conjugacy_classes()) {
    auto n = g.normal_closure(cls);
    if (found.insert(n).second) minimal.push_back(n);
  }
  // Close under joins with the class closures.
  std::vector<std::vector<std::uint32_t>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& a : frontier)
      for (const auto& b : minimal) {
        std::vector<std::uint32_t> both = a;
        both.insert(both.end(), b.begin(), b.end());
        auto j = g.subgroup(both);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<std::uint32_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

}  // namespace sextic
