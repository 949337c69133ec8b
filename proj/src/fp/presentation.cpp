#include "sextic/presentation.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <unordered_map>
#include <sstream>
#include <stdexcept>

namespace sextic {

Presentation::Presentation(std::vector<std::string> generator_names)
    : names_(std::move(generator_names)) {}

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  for (const Word& w : relators) add_relator(w);
}

void Presentation::add_relator(const Word& w) {
  if (w.generator_bound() > names_.size())
    throw std::invalid_argument("relator uses a generator index >= " +
                                std::to_string(names_.size()));
  Word r = w.cyclically_reduced();
  if (!r.empty()) relators_.push_back(std::move(r));
}

void Presentation::add_relator(std::string_view text) {
  add_relator(parse_word(text, names_));
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const Word& r : relators_) n += r.size();
  return n;
}

std::uint32_t Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  throw std::out_of_range("no generator named " + std::string(name));
}

// ---------------------------------------------------------------------------
// Tietze moves

Presentation deduplicate(const Presentation& p) {
  Presentation out(p.generator_names());
  std::set<Word> seen;
  for (const Word& r : p.relators()) {
    Word c = r.cyclic_canonical();
    if (c.empty() || !seen.insert(c).second) continue;
    out.add_relator(r);
  }
  return out;
}

namespace {

// Value of g expressed through relator r, in which g occurs exactly once.
Word solve_for(const Word& r, std::uint32_t g) {
  auto letters = r.letters();
  std::size_t pos = 0;
  while (letters[pos].generator() != g) ++pos;
  Word u(letters.subspan(0, pos));
  Word v(letters.subspan(pos + 1));
  // u g^e v = 1  =>  g^e = u^-1 v^-1
  Word ge = u.inverse() * v.inverse();
  return letters[pos].sign() > 0 ? ge : ge.inverse();
}

Word substitute(const Word& w, std::uint32_t g, const Word& value,
                const Word& value_inv) {
  std::vector<Letter> out;
  Word result;
  for (Letter l : w.letters()) {
    if (l.generator() == g) {
      result *= Word(out);
      out.clear();
      result *= (l.sign() > 0 ? value : value_inv);
    } else {
      std::uint32_t h = l.generator() > g ? l.generator() - 1 : l.generator();
      out.push_back(Letter(h, l.sign()));
    }
  }
  result *= Word(out);
  return result;
}

std::ptrdiff_t find_defining_relator(const Presentation& p, std::uint32_t g) {
  std::ptrdiff_t best = -1;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const Word& r = p.relators()[i];
    if (r.occurrences(g) != 1) continue;
    if (best < 0 || r.size() < p.relators()[static_cast<std::size_t>(best)].size())
      best = static_cast<std::ptrdiff_t>(i);
  }
  return best;
}

Presentation eliminate_with(const Presentation& p, std::uint32_t g,
                            std::size_t rel_index) {
  const Word& r = p.relators()[rel_index];
  Word value = solve_for(r, g);
  // Renumber the substituted value into the reduced generator set.
  Word renum;
  {
    std::vector<Letter> ls;
    for (Letter l : value.letters())
      ls.emplace_back(l.generator() > g ? l.generator() - 1 : l.generator(),
                      l.sign());
    renum = Word(ls);
  }
  Word renum_inv = renum.inverse();
  std::vector<std::string> names = p.generator_names();
  names.erase(names.begin() + g);
  Presentation out(std::move(names));
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i == rel_index) continue;
    out.add_relator(substitute(p.relators()[i], g, renum, renum_inv));
  }
  return out;
}

}  // namespace

Presentation eliminate_generator(const Presentation& p, std::uint32_t g) {
  std::ptrdiff_t idx = find_defining_relator(p, g);
  if (idx < 0)
    throw std::invalid_argument("generator " + p.generator_names().at(g) +
                                " occurs exactly once in no relator");
  return deduplicate(eliminate_with(p, g, static_cast<std::size_t>(idx)));
}

Presentation shorten_relators(const Presentation& p, std::size_t max_tool_length) {
  using Codes = std::u32string;
  std::vector<Codes> rels;
  for (const Word& r : p.relators()) {
    Codes c;
    for (Letter l : r.letters()) c.push_back(l.code());
    rels.push_back(std::move(c));
  }
  auto inverse = [](const Codes& w) {
    Codes out(w.rbegin(), w.rend());
    for (char32_t& x : out) x ^= 1U;
    return out;
  };
  auto reduce = [&](const Codes& w) {
    std::vector<Letter> ls;
    for (char32_t x : w) ls.push_back(Letter::from_code(x));
    Codes out;
    for (Letter l : Word(ls).cyclically_reduced().letters()) out.push_back(l.code());
    return out;
  };

  for (int pass = 0; pass < 16; ++pass) {
    bool changed = false;
    std::set<std::size_t> windows;
    for (const Codes& r : rels)
      if (!r.empty() && r.size() <= max_tool_length) windows.insert(r.size() / 2 + 1);
    // A relator rewritten in this pass is no longer used as a tool, which
    // keeps every rewrite invertible.
    std::vector<bool> dirty(rels.size(), false);
    for (std::size_t m : windows) {
      struct Tool {
        std::size_t index;
        Codes rotation;
      };
      std::unordered_map<Codes, Tool> tools;
      for (std::size_t t = 0; t < rels.size(); ++t) {
        const Codes& r = rels[t];
        if (dirty[t] || r.empty() || r.size() > max_tool_length || r.size() / 2 + 1 != m) continue;
        for (const Codes& w : {r, inverse(r)})
          for (std::size_t k = 0; k < w.size(); ++k) {
            Codes rot = w.substr(k) + w.substr(0, k);
            tools.emplace(rot.substr(0, m), Tool{t, std::move(rot)});
          }
      }
      if (tools.empty()) continue;
      for (std::size_t si = 0; si < rels.size(); ++si) {
        bool again = true;
        while (again) {
          again = false;
          const Codes& s = rels[si];
          const std::size_t n = s.size();
          if (n < m) break;
          const Codes doubled = s + s;
          for (std::size_t pos = 0; pos < n; ++pos) {
            auto it = tools.find(doubled.substr(pos, m));
            if (it == tools.end() || it->second.index == si || dirty[it->second.index]) continue;
            const Codes& rho = it->second.rotation;
            std::size_t k = m;
            while (k < rho.size() && k < n && doubled[pos + k] == rho[k]) ++k;
            Codes rest = doubled.substr(pos + k, n - k);
            rels[si] = reduce(inverse(rho.substr(k)) + rest);
            dirty[si] = true;
            changed = true;
            again = true;
            break;
          }
        }
      }
    }
    if (!changed) break;
  }
  Presentation out(p.generator_names());
  for (const Codes& r : rels) {
    std::vector<Letter> ls;
    for (char32_t x : r) ls.push_back(Letter::from_code(x));
    out.add_relator(Word(ls));
  }
  return deduplicate(out);
}

namespace {

Presentation simplify_round(const Presentation& p, const SimplifyOptions& opt);

}  // namespace

Presentation simplify(const Presentation& p, const SimplifyOptions& opt) {
  Presentation cur = simplify_round(p, opt);
  for (unsigned r = 1; r < opt.rounds; ++r) {
    const std::size_t gens = cur.generator_count();
    cur = simplify_round(cur, opt);
    if (cur.generator_count() == gens) break;
  }
  return cur;
}

namespace {

Presentation simplify_round(const Presentation& p, const SimplifyOptions& opt) {
  Presentation cur = deduplicate(p);
  if (!opt.eliminate_generators) return cur;

  std::size_t limit = opt.length_limit;
  if (limit == 0)
    limit = std::max<std::size_t>(
        static_cast<std::size_t>(opt.expand_limit * static_cast<double>(cur.total_length())),
        opt.min_length_limit);

  // Track surviving "keep" generators by name, since indices shift.
  std::set<std::string> keep;
  for (std::uint32_t k : opt.keep) keep.insert(p.generator_names().at(k));

  if (opt.search) cur = shorten_relators(cur, opt.max_tool_length);
  std::size_t eliminations = 0;
  while (true) {
    const std::size_t total = cur.total_length();
    std::size_t best_total = std::numeric_limits<std::size_t>::max();
    std::uint32_t best_g = 0;
    std::size_t best_rel = 0;

    std::vector<std::size_t> occ(cur.generator_count(), 0);
    for (const Word& r : cur.relators())
      for (Letter l : r.letters()) ++occ[l.generator()];

    for (std::size_t i = 0; i < cur.relators().size(); ++i) {
      const Word& r = cur.relators()[i];
      std::vector<std::size_t> here(cur.generator_count(), 0);
      for (Letter l : r.letters()) ++here[l.generator()];
      for (std::uint32_t g = 0; g < cur.generator_count(); ++g) {
        if (here[g] != 1 || keep.count(cur.generator_names()[g])) continue;
        std::size_t others = occ[g] - 1;
        std::size_t new_total = total - r.size() + others * (r.size() - 1);
        if (new_total < best_total) {
          best_total = new_total;
          best_g = g;
          best_rel = i;
        }
      }
    }
    if (best_total == std::numeric_limits<std::size_t>::max() ||
        best_total > limit) {
      if (!opt.search) break;
      const std::size_t before = cur.total_length();
      const std::size_t count = cur.relators().size();
      cur = shorten_relators(cur, opt.max_tool_length);
      if (cur.total_length() >= before && cur.relators().size() >= count) break;
      continue;
    }
    cur = eliminate_with(cur, best_g, best_rel);
    if (++eliminations % 16 == 0 || cur.relators().size() < 64) cur = deduplicate(cur);
  }
  return deduplicate(cur);
}

}  // namespace

// ---------------------------------------------------------------------------
// Text format

Presentation read_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_gens = false;
  Presentation p;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!have_gens) {
      if (line.rfind("gens:", 0) != 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'gens:' header");
      std::istringstream names(line.substr(5));
      std::vector<std::string> gens;
      for (std::string n; names >> n;) gens.push_back(n);
      p = Presentation(std::move(gens));
      have_gens = true;
      continue;
    }
    try {
      p.add_relator(std::string_view(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  if (!have_gens) throw std::invalid_argument("missing 'gens:' header");
  return p;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_presentation(buf.str());
}

std::string write_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const std::string& n : p.generator_names()) out += " " + n;
  out += '\n';
  for (const Word& r : p.relators()) out += p.format(r) + '\n';
  return out;
}

}  // namespace sextic
