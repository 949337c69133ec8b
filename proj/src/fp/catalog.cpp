#include "sextic/catalog.hpp"

#include <stdexcept>

namespace sextic {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::direct:
      return "direct";
    case Method::centrality:
      return "centrality";
    case Method::perturbation:
      return "perturbation";
  }
  return "?";
}

namespace {

// Abbreviations for the A9+2A4+A2 family, in generators a b g d.
constexpr std::string_view kDelta1 = "(g d g) d (g d g)^-1";
constexpr std::string_view kBeta2 = "(a g d^-1 g^-1) b (a g d^-1 g^-1)^-1";

Word substitute_abbrev(const Word& w, std::size_t base,
                       const std::vector<Word>& values) {
  Word out;
  for (Letter l : w.letters()) {
    if (l.generator() < base) {
      out *= Word::generator(l.generator(), l.sign());
    } else {
      const Word& v = values.at(l.generator() - base);
      out *= (l.sign() > 0 ? v : v.inverse());
    }
  }
  return out;
}

CatalogEntry make_entry(std::string name, Method method,
                        std::vector<std::string> gens,
                        std::vector<RelatorGroup> groups,
                        ExpectedResult expected) {
  CatalogEntry e;
  e.name = std::move(name);
  e.method = method;
  Presentation p(gens);
  for (const RelatorGroup& g : groups)
    for (const std::string& r : g.printed)
      p.add_relator(expand_printed(r, gens));
  e.presentation = std::move(p);
  e.groups = std::move(groups);
  e.expected = std::move(expected);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const ExpectedResult d10xc3{30, {"C6", "C5"}, true};

  // 4A4: generic section, no relators printed; delta is central.
  {
    CatalogEntry e;
    e.name = "4A4";
    e.method = Method::centrality;
    Presentation gens({"a", "b", "g", "d"});
    e.delta = 3;
    for (std::string_view x : {"a", "b", "g"})
      e.assumed_relators.push_back(
          gens.parse("[d," + std::string(x) + "]"));
    e.expected = d10xc3;
    e.notes.push_back(
        "section transversal to B: delta central in Pi (asserted, no "
        "relators printed)");
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "4A4+A1";
    e.method = Method::perturbation;
    e.perturbed_from = "A9+2A4+A1";
    e.expected = d10xc3;
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e = make_entry(
        "4A4+2A1", Method::direct, {"a", "b", "d", "g"},
        {
            {"cusp F5", {"(a b)^2 a = b (a b)^2"}},
            {"fibers F4, F6", {"[b,d]", "[g,d]"}},
            {"fiber F3", {"(a d)^2 = (d a)^2"}},
            {"fiber F2", {"(a^-1 d a b)^2 = (b a^-1 d a)^2"}},
            {"tangent F1", {"g = (a^-1 d a)^-1 b (a^-1 d a)"}},
            {"tangent F7", {"g^-1 a b a^-1 g = (a b) a (a b)^-1"}},
            {"patching F_infinity", {"(a b d g)^2"}},
        },
        {960, {"C6", "C5", "C2^4", "C2"}, true});
    e.delta = 2;
    e.notes.push_back("cusp F8 omitted (one braid relation is redundant)");
    out.push_back(std::move(e));
  }

  const std::vector<std::string> abgd{"a", "b", "g", "d"};
  const std::vector<RelatorGroup> a9_2a4_a2{
      {"tangent F4", {"b = g"}},
      {"fiber F3", {"[a, g d g^-1]"}},
      {"fiber F5", {"(g d)^3 = (d g)^3"}},
      {"cusp F6 (commutation)", {"[a b, D1]"}},
      {"cusp F6", {"D1 (a b)^2 a = b (a b)^2 D1"}},
      {"cusp F2", {"(B2 g)^2 B2 = g (B2 g)^2"}},
      {"patching F_infinity", {"(a b g d)^2"}},
  };

  {
    auto groups = a9_2a4_a2;
    groups[3] = {"perturbed cusp F6", {"[a, D1]", "[b, D1]"}};
    groups[4] = {"perturbed cusp F6", {"(a b)^2 a = b (a b)^2"}};
    CatalogEntry e =
        make_entry("4A4+A2", Method::direct, abgd, groups, d10xc3);
    e.delta = 3;
    e.notes.push_back(
        "intersection point P1 perturbed to two transversal points");
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "A9+2A4";
    e.method = Method::perturbation;
    e.perturbed_from = "2A9";
    e.expected = d10xc3;
    out.push_back(std::move(e));
  }

  {
    auto groups = a9_2a4_a2;
    groups[2] = {"perturbed F5: tangent plus transversal point", {"[g,d]"}};
    CatalogEntry e =
        make_entry("A9+2A4+A1", Method::direct, abgd, groups, d10xc3);
    e.delta = 3;
    e.notes.push_back(
        "inflection point Q3 perturbed to a tangency and a transversal point");
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e =
        make_entry("A9+2A4+A2", Method::direct, abgd, a9_2a4_a2,
                   {21600, {"C6", "C5", "perfect:720"}, true});
    e.delta = 3;
    e.notes.push_back("vertical tangent F1 omitted (redundant braid relation)");
    out.push_back(std::move(e));
  }

  {
    // Generators in fiber order alpha, delta, beta, gamma.
    CatalogEntry e =
        make_entry("2A9", Method::centrality, {"a", "d", "b", "g"},
                   {
                       {"fiber F5", {"[g,b]"}},
                       {"fiber F4", {"b = g"}},
                       {"fiber F3", {"[d,a]"}},
                   },
                   d10xc3);
    e.partial = true;
    e.delta = 1;
    const Presentation& p = *e.presentation;
    for (std::string_view x : {"a", "b", "g"})
      e.assumed_relators.push_back(p.parse("[d," + std::string(x) + "]"));
    e.notes.push_back(
        "relations from the cusp fibers F1, F2 are not listed; delta "
        "centrality is assumed");
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e = make_entry(
        "G_affine", Method::direct, {"a", "b"},
        {
            {"right cusp", {"(a b)^2 a = b (a b)^2"}},
            {"left vertical tangent", {"a b a^-1 b a b = b a b a"}},
        },
        {std::nullopt, {"Z"}, true});
    e.notes.push_back("affine part: kernel of the map to Z is Z5");
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e = make_entry(
        "G_proj", Method::direct, {"a", "b"},
        {
            {"right cusp", {"(a b)^2 a = b (a b)^2"}},
            {"left vertical tangent", {"a b a^-1 b a b = b a b a"}},
            {"patching F_infinity, gamma = beta", {"(a b^2)^2"}},
        },
        d10xc3);
    e.notes.push_back("complement of B and E in Sigma_2");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Word expand_printed(std::string_view printed,
                    const std::vector<std::string>& names) {
  std::vector<std::string> ext = names;
  const std::size_t base = ext.size();
  ext.push_back("D1");
  ext.push_back("B2");
  std::vector<Word> values;
  if (names == std::vector<std::string>{"a", "b", "g", "d"}) {
    values.push_back(parse_word(kDelta1, names));
    values.push_back(parse_word(kBeta2, names));
  }
  Word w = parse_word(printed, ext);
  if (w.generator_bound() > base && values.empty())
    throw std::invalid_argument("abbreviation used outside generators a b g d");
  return substitute_abbrev(w, base, values);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog entry " + std::string(name));
}

const std::vector<std::string>& d10_family_names() {
  static const std::vector<std::string> names{
      "4A4",    "4A4+A1",    "4A4+2A1",   "4A4+A2",
      "A9+2A4", "A9+2A4+A1", "A9+2A4+A2", "2A9"};
  return names;
}

}  // namespace sextic
