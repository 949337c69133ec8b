#include <doctest.h>

#include "sextic/catalog.hpp"
#include "sextic/epimorphism.hpp"
#include "sextic/pipeline.hpp"
#include "sextic/report_json.hpp"
#include "sextic/smith.hpp"

using namespace sextic;

TEST_CASE("pi of a commuting pair is free of rank one") {
  const Presentation Pi = read_presentation("gens: a d\n[a,d]\n");
  const Presentation pi = pi_from_Pi(Pi, 1);
  CHECK(abelianization(pi).format() == "Z");
  CHECK_THROWS_AS(pi_from_Pi(Pi, 2), PipelineError);
  CHECK_THROWS_AS(pi_from_Pi(read_presentation("gens: a d\n[a,d]\nd\n"), 1), PipelineError);
}

TEST_CASE("order-30 certificate") {
  const D10xC3Certificate c = d10xc3_certificate(*catalog_entry("G_proj").presentation);
  CHECK(c.holds());
  CHECK(c.center_order == 3);
  const D10xC3Certificate d = d10xc3_certificate(read_presentation("gens: a b\na^2\nb^2\n(a b)^5\n"));
  CHECK_FALSE(d.holds());
}

TEST_CASE("delta-central shortcut") {
  const ShortcutResult two_a9 = delta_central_shortcut(catalog_entry("2A9"));
  CHECK(two_a9.established);
  CHECK(two_a9.basis == "assumed commutators");
  CHECK(two_a9.certificate.holds());

  const ShortcutResult generic = delta_central_shortcut(catalog_entry("4A4"));
  CHECK(generic.established);
  CHECK(generic.certificate.holds());

  const ShortcutResult refused = delta_central_shortcut(catalog_entry("4A4+2A1"));
  CHECK_FALSE(refused.established);
}

TEST_CASE("perturbation argument") {
  const FamilyReport r = perturbation_argument("2A9", "A9+2A4");
  CHECK(r.pi_order == 30u);
  CHECK(r.d10_quotient);
  CHECK(perturbation_argument("A9+2A4+A1", "4A4+A1").pi_order == 30u);
  CHECK_THROWS_AS(perturbation_argument("4A4+2A1", "4A4+A1"), PipelineError);
}

TEST_CASE("family report for 4A4+2A1") {
  const FamilyReport r = family_report("4A4+2A1");
  CHECK(r.failed_step.empty());
  CHECK(r.pi_order == 960u);
  CHECK(r.derived_factors == std::vector<std::string>{"C6", "C5", "C2^4", "C2"});
  CHECK(r.matches(catalog_entry("4A4+2A1").expected));
  CHECK(has_epimorphism(pi_presentation("4A4+2A1"), dihedral_group(10)));
}

TEST_CASE("auxiliary reports") {
  const FamilyReport ga = family_report("G_affine");
  CHECK_FALSE(ga.pi_order);
  CHECK(ga.derived_factors == std::vector<std::string>{"Z"});
  CHECK(ga.matches(catalog_entry("G_affine").expected));
  const FamilyReport gp = family_report("G_proj");
  CHECK(gp.pi_order == 30u);
}

TEST_CASE("JSON schema and key order") {
  FamilyReport r;
  r.family = "4A4";
  r.method = Method::centrality;
  r.pi_order = 30;
  r.derived_factors = {"C6", "C5"};
  r.d10_quotient = true;
  r.notes = {"n"};
  CHECK(to_json(r).dump() ==
        R"({"family":"4A4","method":"centrality","pi_order":30,"derived_factors":["C6","C5"],)"
        R"("d10_quotient":true,"notes":["n"]})");
  r.pi_order.reset();
  CHECK(to_json(r)["pi_order"].is_null());
  CHECK(to_json(std::vector<FamilyReport>{r, r}).size() == 2);
  CHECK(format_report(r).find("infinite") != std::string::npos);
}
