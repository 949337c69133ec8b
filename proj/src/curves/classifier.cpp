#include "sextic/classifier.hpp"

#include <algorithm>

#include "sextic/trigonal.hpp"

namespace sextic::curves {

std::string kind_name(ContactKind k) {
  switch (k) {
    case ContactKind::smooth_transversal: return "smooth-transversal";
    case ContactKind::smooth_tangent: return "smooth-tangent";
    case ContactKind::cusp_pass: return "cusp-pass";
    case ContactKind::cusp_tangent: return "cusp-tangent";
    case ContactKind::cusp_order5: return "cusp-order5";
  }
  return "?";
}

std::string location_name(Location l) {
  switch (l) {
    case Location::x_zero: return "x=0";
    case Location::x_infinity: return "x=inf";
    case Location::elsewhere: return "elsewhere";
  }
  return "?";
}

int IntersectionProfile::total() const {
  int n = 0;
  for (const Contact& c : contacts) n += c.multiplicity;
  return n;
}

bool IntersectionProfile::all_even() const {
  return std::all_of(contacts.begin(), contacts.end(),
                     [](const Contact& c) { return c.multiplicity % 2 == 0; });
}

std::string IntersectionProfile::describe() const {
  std::string out;
  for (const Contact& c : contacts) {
    if (!out.empty()) out += ", ";
    out += kind_name(c.kind);
    if (c.kind == ContactKind::smooth_tangent) out += "(" + std::to_string(c.multiplicity) + ")";
    out += " @" + location_name(c.where);
  }
  return out + "; cusps off section: " + std::to_string(cusps_off_section);
}

namespace {

const QSqrt5 kHalf(rational(1, 2));

// Contact of the section over x = 0, given ord_0 g and the value c there.
void contact_at_origin(int order, const QSqrt5& c, Location where, IntersectionProfile& out) {
  if (c == kHalf) {
    ContactKind k;
    switch (order) {
      case 2: k = ContactKind::cusp_pass; break;
      case 4: k = ContactKind::cusp_tangent; break;
      case 5: k = ContactKind::cusp_order5; break;
      default:
        throw std::logic_error("intersection index " + std::to_string(order) +
                               " at an A4 cusp is impossible");
    }
    out.contacts.push_back({k, order, where});
    return;
  }
  ++out.cusps_off_section;
  if (order == 0) return;
  out.contacts.push_back({order == 1 ? ContactKind::smooth_transversal
                                     : ContactKind::smooth_tangent,
                          order, where});
}

}  // namespace

IntersectionProfile intersection_profile(const Section& s) {
  const Poly<QSqrt5> g = section_restriction(s.a, s.b, s.c);
  if (g.is_zero()) throw DegenerateSection("section is a component of the curve");
  const Poly<QSqrt5> gi = section_restriction(s.c, -s.b, s.a);
  const int m0 = g.multiplicity(QSqrt5(0));
  const int minf = gi.multiplicity(QSqrt5(0));
  if (minf != 6 - g.degree())
    throw std::logic_error("intersection at x=inf disagrees between charts");

  IntersectionProfile out;
  contact_at_origin(m0, s.c, Location::x_zero, out);
  contact_at_origin(minf, s.a, Location::x_infinity, out);

  const Poly<QSqrt5> h = g / Poly<QSqrt5>::monomial(QSqrt5(1), m0);
  for (const auto& [factor, k] : squarefree_decomposition(h))
    for (int r = 0; r < factor.degree(); ++r)
      out.contacts.push_back({k == 1 ? ContactKind::smooth_transversal : ContactKind::smooth_tangent,
                              k, Location::elsewhere});
  if (out.total() != 6)
    throw std::logic_error("intersection profile totals " + std::to_string(out.total()));
  return out;
}

namespace {

// W12 first, then Y, then A_n by decreasing n.
int symbol_rank(const std::string& s) {
  if (s == "W12") return -1000;
  if (s.rfind("Y", 0) == 0) return -900;
  if (s.size() > 1 && s[0] == 'A') return -std::stoi(s.substr(1));
  return 0;
}

}  // namespace

void SingularitySet::add(const std::string& symbol, int count) {
  if (count <= 0) return;
  for (auto& [s, n] : terms_)
    if (s == symbol) {
      n += count;
      return;
    }
  terms_.emplace_back(symbol, count);
  std::stable_sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) {
    return symbol_rank(x.first) < symbol_rank(y.first);
  });
}

std::string SingularitySet::name() const {
  std::string out;
  for (const auto& [s, n] : terms_) {
    if (!out.empty()) out += "+";
    if (n > 1) out += std::to_string(n);
    out += s;
  }
  return out.empty() ? "empty" : out;
}

int SingularitySet::count(const std::string& symbol) const {
  for (const auto& [s, n] : terms_)
    if (s == symbol) return n;
  return 0;
}

bool SingularitySet::simple() const { return count("W12") == 0 && count("Y^1_1,1") == 0; }

SingularitySet singularities_of_double_cover(const IntersectionProfile& profile) {
  if (profile.total() != 6)
    throw std::invalid_argument("profile total is " + std::to_string(profile.total()) + ", not 6");
  int cusps_on = 0;
  SingularitySet out;
  for (const Contact& c : profile.contacts) {
    const bool at_cusp = c.kind == ContactKind::cusp_pass || c.kind == ContactKind::cusp_tangent ||
                         c.kind == ContactKind::cusp_order5;
    if (at_cusp && c.where == Location::elsewhere)
      throw std::invalid_argument("cusp contact away from the cusps");
    switch (c.kind) {
      case ContactKind::smooth_transversal:
        if (c.multiplicity != 1) throw std::invalid_argument("transversal contact of index > 1");
        break;
      case ContactKind::smooth_tangent:
        if (c.multiplicity < 2) throw std::invalid_argument("tangency of index < 2");
        out.add("A" + std::to_string(c.multiplicity - 1));
        break;
      case ContactKind::cusp_pass:
        if (c.multiplicity != 2) throw std::invalid_argument("cusp pass of index != 2");
        out.add("A9");
        break;
      case ContactKind::cusp_tangent:
        if (c.multiplicity != 4) throw std::invalid_argument("cusp tangency of index != 4");
        out.add("Y^1_1,1");
        break;
      case ContactKind::cusp_order5:
        if (c.multiplicity != 5) throw std::invalid_argument("cusp contact of index != 5");
        out.add("W12");
        break;
    }
    if (at_cusp) ++cusps_on;
  }
  if (cusps_on + profile.cusps_off_section != 2)
    throw std::invalid_argument("profile does not account for both cusps");
  out.add("A4", 2 * profile.cusps_off_section);
  out.reducible = profile.all_even();
  return out;
}

SingularitySet classify_section(const Section& s) {
  return singularities_of_double_cover(intersection_profile(s));
}

Section stratum_example(const std::string& name, const StratumParams& p) {
  const QSqrt5 one(1), half(kHalf);
  const bool inf = p.cusp == Cusp::infinity;
  auto at = [&](const Section& s) { return inf ? s.mirrored() : s; };
  if (name == "4A4") return {one + p.t, p.free, QSqrt5(2) - p.t};
  if (name == "4A4+A1") return tangent_section(p.t, p.free);
  if (name == "4A4+2A1") return double_tangent(p.t, p.sign);
  if (name == "4A4+A2") return inflection_section(p.t);
  if (name == "A9+2A4") return at({one + p.t, p.free, half});
  if (name == "A9+2A4+A1") return tangent_through_cusp(p.t, p.cusp);
  if (name == "A9+2A4+A2")
    return inflection_section(inf ? QSqrt5(rational(-4, 3)) : QSqrt5(rational(3, 4)));
  if (name == "2A9") return {half, p.free, half};
  if (name == "Y^1_1,1+2A4") return at({one + p.t, QSqrt5(3), half});
  if (name == "Y^1_1,1+A9") return {half, QSqrt5(3 * p.sign), half};
  if (name == "W12+2A4") return at({QSqrt5(rational(-11, 2)), QSqrt5(3), half});
  throw std::invalid_argument("unknown stratum \"" + name + "\"");
}

}  // namespace sextic::curves
