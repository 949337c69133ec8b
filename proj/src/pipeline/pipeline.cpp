#include "sextic/pipeline.hpp"

#include <algorithm>

#include "sextic/derived_series.hpp"
#include "sextic/epimorphism.hpp"
#include "sextic/finite_group.hpp"
#include "sextic/metacyclic.hpp"
#include "sextic/perm_group.hpp"
#include "sextic/reidemeister_schreier.hpp"
#include "sextic/smith.hpp"

namespace sextic {

Presentation pi_from_Pi(const Presentation& Pi, std::uint32_t delta, const PipelineOptions& opt) {
  if (delta >= Pi.generator_count()) throw PipelineError("delta is not a generator");
  Presentation q = Pi;
  const Word d = Word::generator(delta);
  q.add_relator(d.pow(2));
  std::vector<Word> h;
  for (std::uint32_t g = 0; g < Pi.generator_count(); ++g) {
    if (g == delta) continue;
    const Word x = Word::generator(g);
    h.push_back(x);
    h.push_back(d * x * d);
  }
  coset::CosetTable t = coset::enumerate(q, h, opt.limits);
  if (!t.complete()) throw coset::OverflowError(opt.limits.max_cosets);
  if (t.size() != 2)
    throw PipelineError("kernel of Pi/delta^2 -> C2 has index " + std::to_string(t.size()) +
                        ", expected 2");
  return subgroup_presentation(q, t);
}

std::string D10xC3Certificate::summary() const {
  return "order " + (order ? std::to_string(*order) : std::string("?")) + ", abelianization " +
         abelianization + ", derived subgroup abelianization " + derived_abelianization +
         ", center order " + std::to_string(center_order) +
         (nonabelian ? ", nonabelian" : ", abelian") +
         (d10_quotient ? ", maps onto D10" : ", no D10 quotient");
}

D10xC3Certificate d10xc3_certificate(const Presentation& pi, const PipelineOptions& opt) {
  D10xC3Certificate c;
  const AbelianInvariants ab = abelianization(pi);
  c.abelianization = ab.format();
  if (!ab.finite()) return c;
  coset::CosetTable t = coset::enumerate(pi, {}, opt.limits);
  if (!t.complete()) return c;
  c.order = t.size();
  c.derived_abelianization = abelianization(derived_subgroup(pi, opt.limits)).format();
  if (*c.order <= 2000) {
    FiniteGroup g = FiniteGroup::from_presentation(pi, 2000, opt.limits);
    c.center_order = g.center().size();
    c.nonabelian = !g.abelian();
  }
  c.d10_quotient = has_epimorphism(pi, dihedral_group(10));
  return c;
}

namespace {

bool has_relator(const Presentation& p, const Word& w) {
  const Word key = w.cyclic_canonical();
  return std::any_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return r.cyclic_canonical() == key; });
}

const Presentation& g_proj() { return *catalog_entry("G_proj").presentation; }

}  // namespace

ShortcutResult delta_central_shortcut(const CatalogEntry& e, const PipelineOptions& opt) {
  ShortcutResult r;
  if (!e.delta) {
    r.basis = "no distinguished generator delta";
    return r;
  }
  const std::uint32_t delta = *e.delta;
  const std::size_t gens =
      e.presentation ? e.presentation->generator_count() : e.assumed_relators.size() + 1;
  std::vector<Word> commutators;
  for (std::uint32_t g = 0; g < gens; ++g)
    if (g != delta) commutators.push_back(commutator(Word::generator(delta), Word::generator(g)));

  auto covered = [&](const std::vector<Word>& rels) {
    Presentation tmp(std::vector<std::string>(gens, "x"), {});
    for (const Word& w : rels) tmp.add_relator(w);
    return std::all_of(commutators.begin(), commutators.end(),
                       [&](const Word& c) { return has_relator(tmp, c); });
  };

  if (covered(e.assumed_relators)) {
    r.established = true;
    r.basis = "assumed commutators";
  } else if (e.presentation && covered(e.presentation->relators())) {
    r.established = true;
    r.basis = "commutator relators";
  } else if (e.presentation && !e.partial) {
    Presentation q = *e.presentation;
    q.add_relator(Word::generator(delta).pow(2));
    coset::CosetTable t = coset::enumerate(q, {}, opt.limits);
    if (!t.complete()) {
      r.basis = "Pi/delta^2 not enumerable within limits";
      return r;
    }
    if (coset::is_central(t, Word::generator(delta))) {
      r.established = true;
      r.basis = "permutation images";
    } else {
      r.basis = "delta is not central in Pi/delta^2 (order " + std::to_string(t.size()) + ")";
      return r;
    }
  } else {
    r.basis = "no centrality facts";
    return r;
  }
  r.certificate = d10xc3_certificate(g_proj(), opt);
  if (!r.certificate.holds()) {
    r.established = false;
    r.basis += "; G_proj certificate failed";
  }
  return r;
}

bool FamilyReport::matches(const ExpectedResult& e) const {
  return failed_step.empty() && pi_order == e.order && derived_factors == e.derived_factors &&
         d10_quotient == e.d10_quotient;
}

Presentation pi_presentation(const std::string& name, const PipelineOptions& opt) {
  const CatalogEntry& e = catalog_entry(name);
  switch (e.method) {
    case Method::direct:
      if (!e.presentation || e.partial) throw PipelineError(name + ": no complete presentation");
      return e.delta ? pi_from_Pi(*e.presentation, *e.delta, opt) : *e.presentation;
    case Method::centrality: {
      ShortcutResult s = delta_central_shortcut(e, opt);
      if (!s.established) throw PipelineError(name + ": " + s.basis);
      return g_proj();
    }
    case Method::perturbation:
      return pi_presentation(e.perturbed_from, opt);
  }
  throw PipelineError("unknown method");
}

namespace {

void fill_from_pi(FamilyReport& r, const Presentation& pi, const PipelineOptions& opt) {
  DerivedSeriesOptions dopt;
  dopt.limits = opt.limits;
  dopt.enumerate_levels = opt.enumerate_levels;
  const DerivedSeriesReport s = derived_series(pi, dopt);
  r.pi_order = s.order();
  r.derived_factors = s.factors();
  if (!s.consistent) r.notes.push_back("derived series orders inconsistent");
  if (s.stop == DerivedSeriesReport::Stop::overflow ||
      s.stop == DerivedSeriesReport::Stop::max_depth)
    r.notes.push_back("derived series stopped: " + stop_name(s.stop));
  try {
    r.d10_quotient = has_epimorphism(pi, dihedral_group(10));
  } catch (const GuardError&) {
    r.notes.push_back("D10 quotient search exceeded its guard");
  }
  if (r.pi_order == 30u) {
    const D10xC3Certificate c = d10xc3_certificate(pi, opt);
    r.notes.push_back(std::string(c.holds() ? "C3 x D10 certificate: " : "certificate failed: ") +
                      c.summary());
  }
}

}  // namespace

FamilyReport perturbation_argument(const std::string& from, const std::string& to,
                                   const PipelineOptions& opt) {
  const Presentation src = pi_presentation(from, opt);
  const D10xC3Certificate cert = d10xc3_certificate(src, opt);
  if (!cert.holds())
    throw PipelineError("perturbation source " + from + " lacks the C3 x D10 certificate (" +
                        cert.summary() + ")");
  const FiniteGroup g = FiniteGroup::from_presentation(src, 2000, opt.limits);
  const auto normals = normal_subgroups_small(g);
  const FiniteGroup d10 = dihedral_group(10);
  std::vector<std::size_t> survivors;
  for (const auto& n : normals) {
    Presentation q = src;
    for (std::uint32_t x : n) q.add_relator(g.words()[x]);
    if (abelianization(q).format() == "C6" && has_epimorphism(q, d10)) survivors.push_back(n.size());
  }
  FamilyReport r;
  r.family = to;
  r.method = Method::perturbation;
  fill_from_pi(r, src, opt);
  r.notes.push_back("pi is a quotient of pi(" + from + ")");
  std::string sizes;
  for (const auto& n : normals) sizes += (sizes.empty() ? "" : ",") + std::to_string(n.size());
  r.notes.push_back(std::to_string(normals.size()) + " normal subgroups of orders " + sizes +
                    "; " + std::to_string(survivors.size()) +
                    " keep abelianization C6 and a D10 quotient");
  if (survivors != std::vector<std::size_t>{1}) {
    r.failed_step = "perturbation: a proper quotient survives";
    r.notes.push_back(r.failed_step);
  }
  return r;
}

FamilyReport family_report(const std::string& name, const PipelineOptions& opt) {
  const CatalogEntry& e = catalog_entry(name);
  FamilyReport r;
  r.family = name;
  r.method = e.method;
  try {
    switch (e.method) {
      case Method::direct: {
        const Presentation pi = pi_presentation(name, opt);
        if (e.delta) {
          r.notes.push_back("pi from Pi: index-2 kernel, " + std::to_string(pi.generator_count()) +
                            " generators, " + std::to_string(pi.relators().size()) + " relators");
          const ShortcutResult s = delta_central_shortcut(e, opt);
          r.notes.push_back("delta-central shortcut: " +
                            std::string(s.established ? "applies (" : "refused (") + s.basis + ")");
        }
        fill_from_pi(r, pi, opt);
        if (!e.delta && e.expected.order == std::nullopt) {
          const MetacyclicReport m = verify_metacyclic_model(pi, opt.limits);
          r.notes.insert(r.notes.end(), m.lines.begin(), m.lines.end());
        }
        break;
      }
      case Method::centrality: {
        const ShortcutResult s = delta_central_shortcut(e, opt);
        if (!s.established) {
          r.failed_step = "centrality: " + s.basis;
          break;
        }
        r.notes.push_back("delta central in Pi/delta^2 (" + s.basis + "), so pi is the G_proj group");
        fill_from_pi(r, g_proj(), opt);
        break;
      }
      case Method::perturbation: {
        FamilyReport p = perturbation_argument(e.perturbed_from, name, opt);
        p.notes.insert(p.notes.begin(), "perturbation of " + e.perturbed_from);
        r = std::move(p);
        break;
      }
    }
  } catch (const std::exception& ex) {
    r.failed_step = ex.what();
  }
  if (!r.failed_step.empty() &&
      std::find(r.notes.begin(), r.notes.end(), "failed: " + r.failed_step) == r.notes.end())
    r.notes.push_back("failed: " + r.failed_step);
  for (const std::string& n : e.notes) r.notes.push_back(n);
  return r;
}

std::vector<FamilyReport> run_all(const PipelineOptions& opt) {
  std::vector<FamilyReport> out;
  for (const std::string& name : d10_family_names()) out.push_back(family_report(name, opt));
  out.push_back(family_report("G_affine", opt));
  out.push_back(family_report("G_proj", opt));
  return out;
}

}  // namespace sextic
