// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sextic/braid.hpp"
#include "sextic/catalog.hpp"
#include "sextic/classifier.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/curve_checks.hpp"
#include "sextic/metacyclic.hpp"
#include "sextic/pipeline.hpp"
#include "sextic/reidemeister_schreier.hpp"
#include "sextic/sections.hpp"
#include "sextic/smith.hpp"
#include "sextic/trigonal.hpp"

using namespace sextic;
using namespace sextic::curves;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

const std::vector<FamilyReport>& reports() {
  static const std::vector<FamilyReport> r = run_all();
  return r;
}

const FamilyReport& report(const std::string& name) {
  for (const FamilyReport& r : reports())
    if (r.family == name) return r;
  throw std::out_of_range(name);
}

QSqrt5 q(long n, long d = 1) { return QSqrt5(rational(n, d)); }

Outcome family_orders() {
  Outcome o;
  const std::vector<std::uint64_t> expected{30, 30, 960, 30, 30, 30, 21600, 30};
  std::vector<std::string> got;
  const auto& names = d10_family_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const FamilyReport& r = report(names[i]);
    got.push_back(r.pi_order ? std::to_string(*r.pi_order) : "?");
    o.require(r.pi_order == expected[i],
              names[i] + ": expected " + std::to_string(expected[i]) + ", computed " + got.back());
  }
  o.summary = "pi orders " + join(got);
  return o;
}

Outcome derived_factors() {
  Outcome o;
  for (const std::string& n : d10_family_names()) {
    const auto& f = report(n).derived_factors;
    std::vector<std::string> want{"C6", "C5"};
    if (n == "4A4+2A1") want = {"C6", "C5", "C2^4", "C2"};
    if (n == "A9+2A4+A2") want = {"C6", "C5", "perfect:720"};
    o.require(f == want, n + ": expected " + join(want) + ", computed " + join(f));
  }
  o.summary = "4A4+2A1 " + join(report("4A4+2A1").derived_factors) + "; A9+2A4+A2 " +
              join(report("A9+2A4+A2").derived_factors) + "; others C6,C5";
  return o;
}

Outcome d10_property() {
  Outcome o;
  int certified = 0;
  for (const std::string& n : d10_family_names()) {
    const FamilyReport& r = report(n);
    o.require(r.d10_quotient, n + ": no epimorphism onto D10 found");
    if (catalog_entry(n).expected.order == 30u) {
      const D10xC3Certificate c = d10xc3_certificate(pi_presentation(n));
      o.require(c.holds(), n + ": certificate failed (" + c.summary() + ")");
      certified += c.holds();
    }
  }
  o.summary = "D10 quotient for all 8 families; C3 x D10 certificate for " +
              std::to_string(certified) + " families";
  return o;
}

Outcome trailing_computation() {
  Outcome o;
  const Presentation ga = *catalog_entry("G_affine").presentation;
  const MetacyclicReport m = verify_metacyclic_model(ga);
  o.require(m.relators_hold, "G_affine relators do not vanish in the Z x| Z5 model");
  o.require(m.surjective, "model images do not generate");
  o.require(m.kernel_order == 5, "kernel order " + std::to_string(m.kernel_order) + ", expected 5");
  const coset::CosetTable t = coset::enumerate(ga, {}, {100000});
  o.require(!t.complete(), "G_affine enumerated within 10^5 cosets");
  std::uint64_t proj = 0;
  try {
    proj = coset::group_order(*catalog_entry("G_proj").presentation);
  } catch (const coset::OverflowError&) {
  }
  o.require(proj == 30, "G_proj order " + std::to_string(proj) + ", expected 30");
  o.summary = "model holds, kernel Z5, G_affine overflows at 10^5, |G_proj| = " +
              std::to_string(proj);
  return o;
}

Outcome curve_identities() {
  Outcome o;
  o.require(discriminant_y() == expected_discriminant_y(),
            "discriminant " + to_string(discriminant_y()));
  o.require(check_parametrization(), "f(x(t), y(t)) is not identically zero");
  o.require(involution_checks(), "involution identity fails");
  const RestrictedDiscriminants r = restricted_discriminant_checks();
  o.require(r.first == r.first_expected, "restricted discriminant (a = c = 1/2): expected " +
                                             to_string(r.first_expected, "b") + ", computed " +
                                             to_string(r.first, "b"));
  o.require(r.second == r.second_expected, "restricted discriminant (c = 1/2, b = 3): expected " +
                                               to_string(r.second_expected, "a") +
                                               ", computed " + to_string(r.second, "a"));
  o.require(double_tangent_identity(), "double-tangent rational identity fails");
  o.require(r.third_is_multiple, "inflection discriminant is not a multiple of the expected shape");
  const Section s = inflection_section(q(3, 4));
  o.require(s == Section{q(3077, 10), q(177, 5), q(1, 2)},
            "inflection at t = 3/4 gives " + to_string(s));
  o.summary = "inflection discriminant scalar " + r.third_scalar.get_str();
  return o;
}

Outcome classifier_goldens() {
  Outcome o;
  auto expect = [&](const Section& s, const std::string& want) {
    const std::string got = classify_section(s).name();
    o.require(got == want, to_string(s) + ": expected " + want + ", computed " + got);
  };
  const Section generic{q(2, 3), q(5, 7), q(-3, 11)};
  expect(generic, "4A4");
  const IntersectionProfile gp = intersection_profile(generic);
  o.require(gp.total() == 6 && gp.cusps_off_section == 2 && gp.contacts.size() == 6,
            "generic profile " + gp.describe());
  expect({q(3077, 10), q(177, 5), q(1, 2)}, "A9+2A4+A2");
  expect({q(1, 2), q(-177, 5), q(3077, 10)}, "A9+2A4+A2");
  expect({q(-11, 2), q(3), q(1, 2)}, "W12+2A4");
  expect({q(1, 2), q(-3), q(-11, 2)}, "W12+2A4");
  for (long b : {3, -3}) {
    const SingularitySet y = classify_section({q(1, 2), q(b), q(1, 2)});
    o.require(y.name() == "Y^1_1,1+A9" && y.reducible,
              "a = c = 1/2, b = " + std::to_string(b) + " gives " + y.name());
  }
  const Section d = double_tangent(q(1, 2), 1);
  expect(d, "4A4+2A1");
  const std::string img = to_decimal(d.a, 5) + ", " + to_decimal(d.b, 4) + ", " + to_decimal(d.c, 3);
  o.require(img == "-161.05, -13.93, 0.0448", "double tangent numeric image " + img);
  o.summary = "double tangent at t = 1/2 is (" + img + ")";
  return o;
}

Outcome property_suites() {
  Outcome o;
  using braid::BraidWord;
  // Braid relations and full twist.
  for (std::uint32_t n = 2; n <= 5; ++n) {
    auto action_equal = [&](const BraidWord& p, const BraidWord& r) {
      for (std::uint32_t j = 0; j < n; ++j)
        if (braid::apply_braid(p, Word::generator(j)) != braid::apply_braid(r, Word::generator(j)))
          return false;
      return true;
    };
    for (std::uint32_t i = 1; i < n; ++i)
      for (std::uint32_t k = i + 1; k < n; ++k) {
        const BraidWord si(n, {{i, 1}}), sk(n, {{k, 1}});
        const bool ok = k == i + 1 ? action_equal(si * sk * si, sk * si * sk)
                                   : action_equal(si * sk, sk * si);
        o.require(ok, "braid relation s" + std::to_string(i) + " s" + std::to_string(k) +
                          " fails for n = " + std::to_string(n));
      }
    o.require(braid::monodromy_at_infinity_check({braid::full_twist(n)}, n),
              "full twist is not conjugation for n = " + std::to_string(n));
  }

  // Smith normal form.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  int snf_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, std::vector<mpz_class>(c));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto diag = smith_form(m, c).diagonal;
    std::vector<mpz_class> nonzero;
    bool divides = true;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] != 0) nonzero.push_back(diag[i]);
      if (i + 1 < diag.size() && diag[i + 1] != 0 && (diag[i] == 0 || diag[i + 1] % diag[i] != 0))
        divides = false;
    }
    if (!divides || nonzero != testing::minor_gcd_oracle(m, c)) ++snf_bad;
  }
  o.require(snf_bad == 0, std::to_string(snf_bad) + " of 100 random SNF disagree with the oracle");

  // Reidemeister-Schreier.
  for (const auto& pr : testing::rs_test_pairs()) {
    const Presentation p = read_presentation(pr.text);
    std::vector<Word> h;
    for (const char* w : pr.subgroup) h.push_back(p.parse(w));
    const coset::CosetTable t = coset::enumerate(p, h);
    const std::uint64_t sub = coset::group_order(subgroup_presentation(p, t));
    o.require(sub * t.size() == coset::group_order(p),
              std::string("order multiplicativity fails for ") + pr.text);
  }

  // Enumeration determinism and relator-order independence.
  const Presentation gp = *catalog_entry("G_proj").presentation;
  const coset::CosetTable ref = coset::enumerate(gp, {});
  o.require(ref == coset::enumerate(gp, {}), "repeated enumeration differs");
  std::vector<Word> rels = gp.relators();
  std::reverse(rels.begin(), rels.end());
  const coset::CosetTable rev = coset::enumerate(Presentation(gp.generator_names(), rels), {});
  o.require(rev.size() == ref.size() && coset::verify_table(rev, gp, {}).empty(),
            "reordered relators change the result");

  // Involution symmetry.
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13);
  int checked = 0;
  while (checked < 50) {
    const Section s{q(num(rng), den(rng)), q(num(rng), den(rng)), q(num(rng), den(rng))};
    try {
      const bool same = classify_section(s) == classify_section(s.mirrored());
      o.require(same, "involution symmetry fails at " + to_string(s));
      ++checked;
    } catch (const DegenerateSection&) {
    }
  }
  o.summary = "braids n <= 5, 100 SNF, 10 RS pairs, enumeration order, 50 involution triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"family group orders", family_orders},
      {"derived series", derived_factors},
      {"D10-sextic property", d10_property},
      {"trailing computation", trailing_computation},
      {"exact curve identities", curve_identities},
      {"classifier goldens", classifier_goldens},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << i + 1 << " (" << criteria[i].first << "): "
         << (o.passed ? "PASS" : "FAIL");
    if (!o.summary.empty()) line << "; " << o.summary;
    for (const auto& f : o.failures) line << "; " << f;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " [" << secs << " s]";
    std::puts(line.str().c_str());
    failed += !o.passed;
  }
  return failed ? 1 : 0;
}
