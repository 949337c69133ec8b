#include "sextic/derived_series.hpp"

#include "sextic/reidemeister_schreier.hpp"

namespace sextic {

coset::CosetTable derived_subgroup_table(const Presentation& p,
                                         const coset::EnumerationLimits& limits) {
  const std::size_t gens = p.generator_count();
  const SmithForm s = smith_form(relation_matrix(p), gens);
  // Moduli of the diagonal coordinates that are nontrivial.
  std::vector<std::size_t> coords;
  std::vector<std::uint64_t> moduli;
  mpz_class total = 1;
  for (std::size_t k = 0; k < gens; ++k) {
    const mpz_class d = k < s.diagonal.size() ? s.diagonal[k] : mpz_class(0);
    if (d == 0) throw InfiniteAbelianizationError("abelianization is infinite");
    if (d == 1) continue;
    coords.push_back(k);
    total *= d;
    if (total > limits.max_cosets) throw coset::OverflowError(limits.max_cosets);
    moduli.push_back(d.get_ui());
  }
  const std::uint64_t n = total.get_ui();
  // Image of each generator, one residue per nontrivial coordinate.
  std::vector<std::vector<std::uint64_t>> image(gens);
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t i = 0; i < coords.size(); ++i) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), s.column_transform[g][coords[i]].get_mpz_t(), moduli[i]);
      image[g].push_back(r.get_ui());
    }
  std::vector<std::int32_t> rows(n * 2 * gens);
  std::vector<std::uint64_t> digits(coords.size());
  for (std::uint64_t c = 0; c < n; ++c) {
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      digits[i] = rest % moduli[i];
      rest /= moduli[i];
    }
    for (std::size_t g = 0; g < gens; ++g)
      for (int sign : {1, -1}) {
        std::uint64_t idx = 0, radix = 1;
        for (std::size_t i = 0; i < coords.size(); ++i) {
          const std::uint64_t m = moduli[i];
          const std::uint64_t d =
              sign > 0 ? (digits[i] + image[g][i]) % m : (digits[i] + m - image[g][i]) % m;
          idx += d * radix;
          radix *= m;
        }
        rows[c * 2 * gens + 2 * g + (sign > 0 ? 0 : 1)] = static_cast<std::int32_t>(idx);
      }
  }
  return coset::standardize(coset::CosetTable(gens, std::move(rows), coset::TableStatus::complete));
}

Presentation derived_subgroup(const Presentation& p, const coset::EnumerationLimits& limits) {
  SimplifyOptions opt;
  opt.rounds = 2;
  return subgroup_presentation(p, derived_subgroup_table(p, limits), opt);
}

std::string stop_name(DerivedSeriesReport::Stop s) {
  switch (s) {
    case DerivedSeriesReport::Stop::trivial:
      return "trivial";
    case DerivedSeriesReport::Stop::perfect:
      return "perfect";
    case DerivedSeriesReport::Stop::infinite_abelianization:
      return "infinite abelianization";
    case DerivedSeriesReport::Stop::max_depth:
      return "max depth";
    case DerivedSeriesReport::Stop::overflow:
      return "overflow";
  }
  return "?";
}

std::vector<std::string> DerivedSeriesReport::factors() const {
  std::vector<std::string> out;
  for (const DerivedLevel& l : levels)
    if (!l.quotient.trivial()) out.push_back(l.quotient.format());
  if (stop == Stop::perfect && !levels.empty()) {
    const auto& o = levels.back().order;
    out.push_back("perfect:" + (o ? std::to_string(*o) : std::string("?")));
  }
  return out;
}

namespace {

std::optional<std::uint64_t> try_order(const Presentation& p, const coset::EnumerationLimits& lim) {
  coset::CosetTable t = coset::enumerate(p, {}, lim);
  if (!t.complete()) return std::nullopt;
  return t.size();
}

}  // namespace

DerivedSeriesReport derived_series(const Presentation& p, const DerivedSeriesOptions& opt) {
  DerivedSeriesReport rep;
  Presentation cur = p;
  // Infinite abelianization already proves |G| infinite.
  std::optional<std::uint64_t> order;
  if (abelianization(cur).finite()) order = try_order(cur, opt.limits);
  for (std::size_t depth = 0;; ++depth) {
    DerivedLevel lvl;
    lvl.generators = cur.generator_count();
    lvl.relators = cur.relators().size();
    lvl.relator_length = cur.total_length();
    lvl.quotient = abelianization(cur);
    lvl.order = order;
    lvl.presentation = cur;
    const AbelianInvariants ab = lvl.quotient;
    rep.levels.push_back(std::move(lvl));

    if (ab.trivial()) {
      std::optional<std::uint64_t>& o = rep.levels.back().order;
      if (!o && cur.generator_count() == 0) o = 1;
      if (!o) o = try_order(cur, opt.limits);
      if (!o) {
        rep.stop = DerivedSeriesReport::Stop::perfect;
      } else {
        rep.stop = *o == 1 ? DerivedSeriesReport::Stop::trivial : DerivedSeriesReport::Stop::perfect;
      }
      return rep;
    }
    if (!ab.finite()) {
      rep.stop = DerivedSeriesReport::Stop::infinite_abelianization;
      return rep;
    }
    if (depth + 1 >= opt.max_depth) {
      rep.stop = DerivedSeriesReport::Stop::max_depth;
      return rep;
    }
    std::optional<std::uint64_t> next;
    if (order) next = *order / ab.order().get_ui();
    try {
      cur = derived_subgroup(cur, opt.limits);
    } catch (const coset::OverflowError&) {
      rep.stop = DerivedSeriesReport::Stop::overflow;
      return rep;
    }
    if (opt.enumerate_levels) {
      std::optional<std::uint64_t> counted = try_order(cur, opt.limits);
      if (counted && next && *counted != *next) rep.consistent = false;
      if (counted) next = counted;
    }
    order = next;
  }
}

}  // namespace sextic
