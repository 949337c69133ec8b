// Command-line front end: groups and curves subcommands.
//
// Exit codes: 0 success, 1 a completed computation disagrees with the
// expected value, 2 usage error, 3 the computation could not finish
// (coset overflow or a refused input).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include "sextic/adjacency.hpp"
#include "sextic/catalog.hpp"
#include "sextic/classifier.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/curve_checks.hpp"
#include "sextic/derived_series.hpp"
#include "sextic/epimorphism.hpp"
#include "sextic/pipeline.hpp"
#include "sextic/presentation.hpp"
#include "sextic/report_json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sextic;
using namespace sextic::curves;

constexpr int kOk = 0, kMismatch = 1, kIncomplete = 3;

struct GroupFlags {
  bool json = false;
  std::size_t max_cosets = 1'000'000;
  std::string file, family, target = "dihedral:10";
  std::size_t max_results = 10;

  PipelineOptions pipeline() const {
    PipelineOptions o;
    o.limits.max_cosets = max_cosets;
    return o;
  }
};

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void report_mismatch(const FamilyReport& r, const ExpectedResult& e) {
  std::ostringstream exp;
  exp << "order " << (e.order ? std::to_string(*e.order) : "infinite") << ", factors";
  for (const auto& f : e.derived_factors) exp << " " << f;
  exp << ", D10 quotient " << (e.d10_quotient ? "yes" : "no");
  std::ostringstream got;
  got << "order " << (r.pi_order ? std::to_string(*r.pi_order) : "infinite") << ", factors";
  for (const auto& f : r.derived_factors) got << " " << f;
  got << ", D10 quotient " << (r.d10_quotient ? "yes" : "no");
  if (!r.failed_step.empty()) got << ", failed step: " << r.failed_step;
  std::cerr << "MISMATCH " << r.family << ": expected " << exp.str() << "; computed " << got.str()
            << "\n";
}

int groups_run_all(const GroupFlags& f) {
  const auto reports = run_all(f.pipeline());
  int code = kOk;
  const auto& d10 = d10_family_names();
  ordered_json fam = ordered_json::array(), aux = ordered_json::array();
  for (const FamilyReport& r : reports) {
    const ExpectedResult& e = catalog_entry(r.family).expected;
    if (!r.matches(e)) {
      report_mismatch(r, e);
      code = kMismatch;
    }
    const bool main = std::find(d10.begin(), d10.end(), r.family) != d10.end();
    (main ? fam : aux).push_back(to_json(r));
    if (!f.json) std::cout << format_report(r) << "\n";
  }
  if (f.json) print_json(ordered_json{{"families", fam}, {"auxiliary", aux}});
  return code;
}

int groups_family(const GroupFlags& f) {
  const FamilyReport r = family_report(f.family, f.pipeline());
  if (f.json)
    print_json(to_json(r));
  else
    std::cout << format_report(r) << "\n";
  const ExpectedResult& e = catalog_entry(r.family).expected;
  if (r.matches(e)) return kOk;
  report_mismatch(r, e);
  return kMismatch;
}

int groups_order(const GroupFlags& f) {
  const Presentation p = read_presentation_file(f.file);
  const std::uint64_t n = coset::group_order(p, f.pipeline().limits);
  if (f.json)
    print_json(ordered_json{{"order", n}});
  else
    std::cout << n << "\n";
  return kOk;
}

int groups_derived_series(const GroupFlags& f) {
  const Presentation p = read_presentation_file(f.file);
  DerivedSeriesOptions opt;
  opt.limits = f.pipeline().limits;
  const DerivedSeriesReport r = derived_series(p, opt);
  if (f.json) {
    ordered_json levels = ordered_json::array();
    for (const DerivedLevel& l : r.levels)
      levels.push_back({{"generators", l.generators},
                        {"relators", l.relators},
                        {"quotient", l.quotient.format()},
                        {"order", l.order ? ordered_json(*l.order) : ordered_json(nullptr)}});
    print_json({{"levels", levels}, {"factors", r.factors()}, {"stop", stop_name(r.stop)},
                {"consistent", r.consistent}});
  } else {
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      const DerivedLevel& l = r.levels[k];
      std::cout << "level " << k << ": " << l.generators << " generators, " << l.relators
                << " relators, order " << (l.order ? std::to_string(*l.order) : "?")
                << ", quotient " << l.quotient.format() << "\n";
    }
    std::cout << "stop: " << stop_name(r.stop) << "\n";
  }
  return r.consistent ? kOk : kMismatch;
}

int groups_epi(const GroupFlags& f) {
  const Presentation p = read_presentation_file(f.file);
  const FiniteGroup target = parse_target(f.target);
  EpimorphismOptions opt;
  opt.max_results = f.max_results;
  const auto found = find_epimorphisms(p, target, opt);
  if (f.json) {
    ordered_json maps = ordered_json::array();
    for (const auto& m : found) maps.push_back(m);
    print_json({{"target", f.target}, {"count", found.size()}, {"images", maps}});
  } else {
    std::cout << found.size() << " epimorphism(s) onto " << f.target
              << (found.size() >= f.max_results ? " (search capped)" : "") << "\n";
    for (const auto& m : found) {
      for (std::size_t g = 0; g < m.size(); ++g)
        std::cout << (g ? " " : "  ") << p.generator_names()[g] << "->" << m[g];
      std::cout << "\n";
    }
  }
  return kOk;
}

struct CurveFlags {
  bool json = false;
  std::string a = "0", b = "0", c = "0";
  std::string stratum, t = "1/2", free = "0", cusp = "0";
  int sign = 1;
  std::string range = "-1:1";
  int samples = 201;
};

Section section_of(const CurveFlags& f) {
  return {parse_qsqrt5(f.a), parse_qsqrt5(f.b), parse_qsqrt5(f.c)};
}

ordered_json section_json(const Section& s) {
  auto one = [](const QSqrt5& x) {
    return ordered_json{{"exact", to_string(x)}, {"approx", x.approx()}};
  };
  return {{"a", one(s.a)}, {"b", one(s.b)}, {"c", one(s.c)}};
}

ordered_json classification_json(const Section& s, const IntersectionProfile& prof,
                                 const SingularitySet& set) {
  ordered_json contacts = ordered_json::array();
  for (const Contact& c : prof.contacts)
    contacts.push_back({{"kind", kind_name(c.kind)},
                        {"multiplicity", c.multiplicity},
                        {"location", location_name(c.where)}});
  return {{"section", section_json(s)},
          {"singularities", set.name()},
          {"simple", set.simple()},
          {"reducible", set.reducible},
          {"contacts", contacts},
          {"cusps_off_section", prof.cusps_off_section}};
}

int curves_verify_all(const CurveFlags& f) {
  const auto checks = verify_all_curves();
  int code = kOk;
  ordered_json arr = ordered_json::array();
  for (const CurveCheck& c : checks) {
    if (!c.passed) code = kMismatch;
    if (f.json) {
      arr.push_back({{"check", c.name},
                     {"passed", c.passed},
                     {"expected", c.expected},
                     {"computed", c.computed}});
    } else {
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
      if (!c.passed)
        std::cout << "      expected " << c.expected << "\n      computed " << c.computed << "\n";
    }
  }
  if (f.json) print_json(arr);
  return code;
}

int curves_classify(const CurveFlags& f) {
  const Section s = section_of(f);
  const IntersectionProfile prof = intersection_profile(s);
  const SingularitySet set = singularities_of_double_cover(prof);
  if (f.json) {
    print_json(classification_json(s, prof, set));
  } else {
    std::cout << to_string(s) << "\n"
              << "singularities: " << set.name() << (set.reducible ? " (reducible)" : "") << "\n"
              << "contacts: " << prof.describe() << "\n";
  }
  return kOk;
}

int curves_stratum(const CurveFlags& f) {
  StratumParams p;
  p.t = parse_qsqrt5(f.t);
  p.free = parse_qsqrt5(f.free);
  p.sign = f.sign;
  p.cusp = f.cusp == "inf" ? Cusp::infinity : Cusp::zero;
  const Section s = stratum_example(f.stratum, p);
  const IntersectionProfile prof = intersection_profile(s);
  const SingularitySet set = singularities_of_double_cover(prof);
  // A special parameter may land in a degeneration of the stratum.
  const std::string got = set.name();
  const bool exact = got == f.stratum;
  const auto& nodes = adjacency_nodes();
  const bool known = std::find(nodes.begin(), nodes.end(), got) != nodes.end();
  const bool special = !exact && known && degenerates_to(f.stratum, got);
  if (f.json) {
    ordered_json j = classification_json(s, prof, set);
    j["stratum"] = f.stratum;
    j["status"] = exact ? "match" : (special ? "degeneration" : "mismatch");
    print_json(j);
  } else {
    std::cout << to_string(s) << "\n"
              << "  ~ (" << to_decimal(s.a) << ", " << to_decimal(s.b) << ", " << to_decimal(s.c)
              << ")\n"
              << "singularities: " << got << (set.reducible ? " (reducible)" : "") << "\n";
    if (special) std::cout << "special parameter: " << got << " degenerates " << f.stratum << "\n";
  }
  if (exact || special) return kOk;
  std::cerr << "MISMATCH stratum " << f.stratum << ": computed " << got << "\n";
  return kMismatch;
}

int curves_plot(const CurveFlags& f) {
  const auto colon = f.range.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected x0:x1");
  const double x0 = std::stod(f.range.substr(0, colon)), x1 = std::stod(f.range.substr(colon + 1));
  std::cout << plot_csv(section_of(f), x0, x1, f.samples);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of D10-sextics and their section strata"};
  app.require_subcommand(1);

  GroupFlags gf;
  CurveFlags cf;
  int (*action)(const GroupFlags&) = nullptr;
  int (*curve_action)(const CurveFlags&) = nullptr;

  auto* groups = app.add_subcommand("groups", "Group computations");
  groups->require_subcommand(1);
  groups->add_option("--max-cosets", gf.max_cosets, "Coset table limit")
      ->check(CLI::PositiveNumber);
  groups->add_flag("--json", gf.json, "JSON output");
  auto* run_all_cmd = groups->add_subcommand("run-all", "All families and auxiliary groups");
  run_all_cmd->callback([&] { action = groups_run_all; });
  auto* family = groups->add_subcommand("family", "One family by name");
  family->add_option("name", gf.family, "Family name, e.g. 4A4+2A1")->required();
  family->callback([&] { action = groups_family; });
  auto* order = groups->add_subcommand("order", "Order of a presented group");
  order->add_option("file", gf.file)->required()->check(CLI::ExistingFile);
  order->callback([&] { action = groups_order; });
  auto* ds = groups->add_subcommand("derived-series", "Derived series of a presented group");
  ds->add_option("file", gf.file)->required()->check(CLI::ExistingFile);
  ds->callback([&] { action = groups_derived_series; });
  auto* epi = groups->add_subcommand("epi", "Epimorphisms onto a finite group");
  epi->add_option("file", gf.file)->required()->check(CLI::ExistingFile);
  epi->add_option("--target", gf.target, "dihedral:n, cyclic:n or a group-table file");
  epi->add_option("--max-results", gf.max_results)->check(CLI::PositiveNumber);
  epi->callback([&] { action = groups_epi; });
  for (auto* sub : {run_all_cmd, family, order, ds, epi}) {
    sub->add_flag("--json", gf.json, "JSON output");
    sub->add_option("--max-cosets", gf.max_cosets, "Coset table limit")->check(CLI::PositiveNumber);
  }

  auto* curves = app.add_subcommand("curves", "Exact curve computations");
  curves->require_subcommand(1);
  curves->add_flag("--json", cf.json, "JSON output");
  auto* verify = curves->add_subcommand("verify-all", "All exact identities and goldens");
  verify->add_flag("--json", cf.json, "JSON output");
  verify->callback([&] { curve_action = curves_verify_all; });
  auto abc = [&](CLI::App* sub) {
    sub->add_option("--a", cf.a, "Coefficient a (p/q or p/q + r/s*s5)")->required();
    sub->add_option("--b", cf.b, "Coefficient b")->required();
    sub->add_option("--c", cf.c, "Coefficient c")->required();
  };
  auto* classify = curves->add_subcommand("classify", "Singularities for the section y = ax^2+bx+c");
  abc(classify);
  classify->add_flag("--json", cf.json, "JSON output");
  classify->callback([&] { curve_action = curves_classify; });
  auto* stratum = curves->add_subcommand("stratum", "A section of a named stratum");
  stratum->add_option("name", cf.stratum, "e.g. 4A4+2A1, A9+2A4+A1, W12+2A4")
      ->required()
      ->check(CLI::IsMember(adjacency_nodes()));
  stratum->add_option("--t", cf.t, "Curve parameter");
  stratum->add_option("--free", cf.free, "Free coordinate of the family");
  stratum->add_option("--sign", cf.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  stratum->add_option("--cusp", cf.cusp, "0 or inf")->check(CLI::IsMember({"0", "inf"}));
  stratum->add_flag("--json", cf.json, "JSON output");
  stratum->callback([&] { curve_action = curves_stratum; });
  auto* plot = curves->add_subcommand("plot", "CSV samples of the curve and a section");
  abc(plot);
  plot->add_option("--range", cf.range, "x0:x1");
  plot->add_option("--samples", cf.samples)->check(CLI::Range(2, 1'000'000));
  plot->callback([&] { curve_action = curves_plot; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (action) return action(gf);
    if (curve_action) return curve_action(cf);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const coset::OverflowError& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return kIncomplete;
  } catch (const PipelineError& e) {
    std::cerr << "MISMATCH: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
      std::cerr << "MISMATCH: " << e.what() << "\n";
      return kMismatch;
    }
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return kIncomplete;
  }
  return 2;
}
