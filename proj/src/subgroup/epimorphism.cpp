#include "sextic/epimorphism.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sextic {

FiniteGroup dihedral_group(std::uint32_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("dihedral order must be even and >= 2");
  const std::uint32_t m = n / 2;
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t i = a % m, j = a / m, k = b % m, l = b / m;
      const std::uint32_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
      t[a][b] = rot + m * ((j + l) % 2);
    }
  std::vector<std::uint32_t> gens;
  if (m > 1) gens.push_back(1);
  gens.push_back(m);
  return FiniteGroup(std::move(t), gens);
}

FiniteGroup cyclic_group(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), n > 1 ? std::vector<std::uint32_t>{1} : std::vector<std::uint32_t>{});
}

FiniteGroup read_group_table(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    long v;
    while (ls >> v) {
      if (v < 0) throw std::invalid_argument("negative entry in group table");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ls.eof()) throw std::invalid_argument("non-integer entry in group table");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return FiniteGroup(std::move(rows));
}

FiniteGroup parse_target(const std::string& spec) {
  auto number = [&](std::size_t from) {
    const std::string s = spec.substr(from);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad group order in \"" + spec + "\"");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  if (spec.rfind("dihedral:", 0) == 0) return dihedral_group(number(9));
  if (spec.rfind("cyclic:", 0) == 0) return cyclic_group(number(7));
  std::ifstream f(spec);
  if (!f) throw std::invalid_argument("cannot open group table \"" + spec + "\"");
  std::stringstream ss;
  ss << f.rdbuf();
  return read_group_table(ss.str());
}

std::uint32_t evaluate(const FiniteGroup& g, const std::vector<std::uint32_t>& images,
                       const Word& w) {
  std::uint32_t x = 0;
  for (Letter l : w.letters()) {
    const std::uint32_t y = images.at(l.generator());
    x = g.mul(x, l.sign() > 0 ? y : g.inv(y));
  }
  return x;
}

std::vector<std::vector<std::uint32_t>> find_epimorphisms(const Presentation& p,
                                                          const FiniteGroup& target,
                                                          const EpimorphismOptions& opt) {
  const std::size_t gens = p.generator_count();
  const double space = std::pow(static_cast<double>(target.order()), static_cast<double>(gens));
  if (space > opt.max_search) throw GuardError("epimorphism search space exceeds guard");

  // Relators to check once generator k is assigned (k = largest index used).
  std::vector<std::vector<const Word*>> due(gens);
  // Orders forced by relators g^n.
  std::vector<std::uint64_t> forced(gens, 0);
  for (const Word& r : p.relators()) {
    if (r.empty()) continue;
    due[r.generator_bound() - 1].push_back(&r);
    const std::uint32_t g = r[0].generator();
    if (r.occurrences(g) == r.size())
      forced[g] = std::gcd(forced[g], static_cast<std::uint64_t>(std::labs(r.exponent_sum(g))));
  }
  std::vector<std::uint64_t> elem_order(target.order());
  for (std::uint32_t a = 0; a < target.order(); ++a) elem_order[a] = target.element_order(a);

  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> images(gens, 0);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens) {
      if (target.subgroup(images).size() == target.order()) {
        out.push_back(images);
        if (opt.max_results && out.size() >= opt.max_results) return false;
      }
      return true;
    }
    for (std::uint32_t a = 0; a < target.order(); ++a) {
      if (forced[k] && forced[k] % elem_order[a] != 0) continue;
      images[k] = a;
      bool ok = true;
      for (const Word* r : due[k])
        if (evaluate(target, images, *r) != 0) {
          ok = false;
          break;
        }
      if (ok && !self(self, k + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
  return out;
}

bool has_epimorphism(const Presentation& p, const FiniteGroup& target) {
  EpimorphismOptions opt;
  opt.max_results = 1;
  return !find_epimorphisms(p, target, opt).empty();
}

}  // namespace sextic
