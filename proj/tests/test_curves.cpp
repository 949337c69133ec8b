#include <doctest.h>

#include <random>

#include "sextic/adjacency.hpp"
#include "sextic/classifier.hpp"
#include "sextic/curve_checks.hpp"
#include "sextic/qsqrt5.hpp"
#include "sextic/sections.hpp"
#include "sextic/trigonal.hpp"

using namespace sextic::curves;

namespace {

QSqrt5 q(long n, long d = 1) { return QSqrt5(rational(n, d)); }

QSqrt5 random_element(std::mt19937& rng, bool irrational) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13);
  mpq_class u = rational(num(rng), den(rng));
  mpq_class v = irrational ? rational(num(rng), den(rng)) : mpq_class(0);
  return QSqrt5(u, v);
}

// A rational parameter away from the excluded values.
QSqrt5 random_parameter(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(2, 11);
  for (;;) {
    const QSqrt5 t = q(num(rng), den(rng));
    if (!t.is_zero() && t != q(1) && t != q(-1)) return t;
  }
}

}  // namespace

TEST_CASE("Q(sqrt5) arithmetic") {
  const QSqrt5 s5 = QSqrt5::sqrt5();
  CHECK(s5 * s5 == q(5));
  CHECK((s5 + q(1)) * (s5 - q(1)) == q(4));
  CHECK(s5.sign() > 0);
  CHECK((q(2) - s5).sign() < 0);
  CHECK((q(9, 4) - s5).sign() > 0);
  CHECK_THROWS_AS(q(1) / QSqrt5(), std::domain_error);
  CHECK(parse_qsqrt5("1/2 + 3/4*s5") == QSqrt5(rational(1, 2), rational(3, 4)));
  CHECK(parse_qsqrt5("-s5") == -s5);
  CHECK(parse_qsqrt5("-0.125") == q(-1, 8));
  CHECK_THROWS_AS(parse_qsqrt5("1/2 + x"), std::invalid_argument);
  CHECK(to_decimal(epsilon_pm(1), 4) == "-0.382");

  std::mt19937 rng(99);
  for (int k = 0; k < 300; ++k) {
    const QSqrt5 x = random_element(rng, true), y = random_element(rng, true);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x * x.conj() == QSqrt5(x.norm()));
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!x.is_zero()) CHECK(x * x.inverse() == q(1));
    const auto [lo, hi] = x.enclosure();
    CHECK(lo <= hi);
    CHECK((QSqrt5(lo) - x).sign() <= 0);
    CHECK((QSqrt5(hi) - x).sign() >= 0);
  }
}

TEST_CASE("polynomials") {
  const QPoly x = QPoly::x();
  const QPoly f = (x - QPoly(mpq_class(1))).pow(3) * (x + QPoly(mpq_class(2))).pow(2) *
                  (x * x + QPoly(mpq_class(1)));
  const auto sf = squarefree_decomposition(f.scaled(mpq_class(7)));
  QPoly prod(mpq_class(7));
  for (const auto& [g, m] : sf) prod *= g.pow(m);
  CHECK(prod == f.scaled(mpq_class(7)));
  REQUIRE(sf.size() == 3);
  CHECK(f.multiplicity(mpq_class(1)) == 3);
  CHECK(f.multiplicity(mpq_class(-2)) == 2);
  const QPoly cubic = QPoly::from_ints({1, 0, 1, 1});
  CHECK(discriminant(cubic) == mpq_class(-31));
  CHECK(resultant(x * x - QPoly(mpq_class(2)), x - QPoly(mpq_class(3))) == mpq_class(7));

  std::mt19937 rng(4);
  for (int k = 0; k < 30; ++k) {
    std::uniform_int_distribution<long> c(-4, 4);
    QPoly g = QPoly::from_ints({c(rng), c(rng), 1});
    QPoly h = QPoly::from_ints({c(rng), 1}).pow(2) * g * g.scaled(mpq_class(3));
    QPoly r(mpq_class(3));
    for (const auto& [p, m] : squarefree_decomposition(h)) r *= p.pow(m);
    CHECK(r == h);
  }
}

TEST_CASE("the trigonal curve") {
  const auto f = trigonal_f();
  CHECK(f.coeff(3) == QRat(mpq_class(4)));
  CHECK(trigonal_p().coeff(0) == 1);
  CHECK(trigonal_q().coeff(0) == 1);
  CHECK(trigonal_eval(mpq_class(0), mpq_class(1, 2)) == 0);
  const QPoly d = discriminant_y();
  CHECK(d.degree() == 7);
  CHECK(d.lc() == mpq_class(746496));
  CHECK(d == expected_discriminant_y());
  for (int s : {1, -1}) {
    const QSqrt5 xs = x_pm(s);
    CHECK(xs * xs - q(11) * xs - q(1) == QSqrt5());
  }
  CHECK(check_parametrization());
  CHECK(check_vertical_tangents());
  CHECK(involution_checks());
  // The point over t = 1 is (0, -1) on the curve.
  CHECK(param_x(mpq_class(1)) == 0);
  CHECK(param_y(mpq_class(1)) == -1);
  CHECK(trigonal_eval(mpq_class(0), param_y(mpq_class(1))) == 0);
  CHECK(epsilon_pm(1) * epsilon_pm(-1) == q(1));
}

TEST_CASE("section restriction") {
  CHECK(section_restriction(q(2, 3), q(1), q(5)).degree() == 6);
  CHECK(section_restriction(q(1, 2), q(1), q(5)).degree() < 6);
  for (long n : {-3, -1, 0, 1, 2}) {
    const QSqrt5 c = q(n, 2);
    const QSqrt5 g0 = section_restriction(q(3), q(1), c).coeff(0);
    CHECK(g0 == (c + q(1)) * (q(2) * c - q(1)) * (q(2) * c - q(1)));
  }
  std::mt19937 rng(8);
  for (int k = 0; k < 20; ++k)
    CHECK(section_transform_check(random_element(rng, true), random_element(rng, true),
                                  random_element(rng, true)));
}

TEST_CASE("tangent sections") {
  std::mt19937 rng(12);
  for (int k = 0; k < 10; ++k) {
    const QSqrt5 t = random_parameter(rng);
    const Section s = tangent_section(t, random_element(rng, false));
    CHECK(contact_order(s, t) >= 2);
  }
  const Section at1 = tangent_section(q(1), q(7));
  CHECK(at1.b == q(-6));
  CHECK(at1.c == q(-1));
  CHECK_THROWS_AS(tangent_section(QSqrt5(), q(1)), std::domain_error);
  CHECK_THROWS_AS(tangent_section(t_pm(1), q(1)), std::domain_error);

  for (int k = 0; k < 10; ++k) {
    const QSqrt5 t = random_parameter(rng);
    const Section z = tangent_through_cusp(t, Cusp::zero);
    CHECK(z.c == q(1, 2));
    CHECK(contact_order(z, t) >= 2);
    const Section i = tangent_through_cusp(t, Cusp::infinity);
    CHECK(i.a == q(1, 2));
    const Section mirrored = tangent_through_cusp(-q(1) / t, Cusp::infinity);
    CHECK(mirrored == z.mirrored());
  }
  // The tangent at 3/4 with b from the inflection family is the inflection.
  const Section infl = inflection_section(q(3, 4));
  const Section tan = tangent_section(q(3, 4), infl.b);
  CHECK(tan == infl);
}

TEST_CASE("double tangents") {
  const Section s = double_tangent(q(1, 2), 1);
  CHECK(to_decimal(s.a, 5) == "-161.05");
  CHECK(to_decimal(s.b, 4) == "-13.93");
  CHECK(to_decimal(s.c, 3) == "0.0448");
  CHECK(contact_order(s, q(1, 2)) == 2);
  CHECK(contact_order(s, epsilon_pm(1) * q(1, 2)) == 2);
  CHECK(classify_section(s).name() == "4A4+2A1");
  CHECK(double_tangent_ratio_check(q(3), epsilon_pm(1) * q(3)));
  CHECK(double_tangent_ratio_check(q(3), epsilon_pm(-1) * q(3)));
  CHECK_FALSE(double_tangent_ratio_check(q(1), q(2)));
  CHECK(double_tangent_identity());
}

TEST_CASE("inflection sections") {
  const Section s = inflection_section(q(3, 4));
  CHECK(s == Section{q(3077, 10), q(177, 5), q(1, 2)});
  CHECK(inflection_section(q(-4, 3)) == Section{q(1, 2), q(-177, 5), q(3077, 10)});
  std::mt19937 rng(21);
  for (int k = 0; k < 20; ++k) {
    const QSqrt5 t = random_parameter(rng);
    CHECK(inflection_section(t) == inflection_by_linear_solve(t));
  }
  CHECK_THROWS_AS(inflection_section(QSqrt5()), std::domain_error);
}

TEST_CASE("restricted discriminants") {
  const RestrictedDiscriminants r = restricted_discriminant_checks();
  CHECK(r.first == r.first_expected);
  // The second one comes out with the opposite sign.
  CHECK(r.second == -r.second_expected);
  CHECK(r.third_is_multiple);
  CHECK(r.third_scalar == -6480);
}

TEST_CASE("intersection profiles") {
  const IntersectionProfile y = intersection_profile({q(1, 2), q(3), q(1, 2)});
  CHECK(y.total() == 6);
  CHECK(y.all_even());
  const IntersectionProfile w = intersection_profile({q(-11, 2), q(3), q(1, 2)});
  REQUIRE_FALSE(w.contacts.empty());
  bool order5 = false;
  for (const Contact& c : w.contacts)
    if (c.kind == ContactKind::cusp_order5 && c.where == Location::x_zero) order5 = true;
  CHECK(order5);
  const IntersectionProfile infl = intersection_profile({q(3077, 10), q(177, 5), q(1, 2)});
  CHECK(infl.total() == 6);
  CHECK(infl.cusps_off_section == 1);
}

TEST_CASE("classifier goldens") {
  CHECK(classify_section({q(2, 3), q(5, 7), q(-3, 11)}).name() == "4A4");
  CHECK(classify_section({q(3077, 10), q(177, 5), q(1, 2)}).name() == "A9+2A4+A2");
  CHECK(classify_section({q(1, 2), q(-177, 5), q(3077, 10)}).name() == "A9+2A4+A2");
  CHECK(classify_section({q(-11, 2), q(3), q(1, 2)}).name() == "W12+2A4");
  CHECK(classify_section({q(1, 2), q(-3), q(-11, 2)}).name() == "W12+2A4");
  for (int sign : {1, -1}) {
    const SingularitySet y = classify_section({q(1, 2), q(3 * sign), q(1, 2)});
    CHECK(y.name() == "Y^1_1,1+A9");
    CHECK(y.reducible);
    CHECK_FALSE(y.simple());
  }
  CHECK(classify_section({q(1, 2), q(1), q(1, 2)}).name() == "2A9");
}

TEST_CASE("dictionary") {
  IntersectionProfile p;
  p.cusps_off_section = 2;
  for (int k = 0; k < 6; ++k) p.contacts.push_back({ContactKind::smooth_transversal, 1, Location::elsewhere});
  CHECK(singularities_of_double_cover(p).name() == "4A4");
  p.contacts.resize(2);
  p.contacts.push_back({ContactKind::smooth_tangent, 2, Location::elsewhere});
  p.contacts.push_back({ContactKind::smooth_tangent, 2, Location::elsewhere});
  CHECK(singularities_of_double_cover(p).name() == "4A4+2A1");
  IntersectionProfile q2;
  q2.contacts = {{ContactKind::cusp_pass, 2, Location::x_zero},
                 {ContactKind::cusp_pass, 2, Location::x_infinity},
                 {ContactKind::smooth_transversal, 1, Location::elsewhere},
                 {ContactKind::smooth_transversal, 1, Location::elsewhere}};
  CHECK(singularities_of_double_cover(q2).name() == "2A9");
  q2.contacts.pop_back();
  CHECK_THROWS_AS(singularities_of_double_cover(q2), std::invalid_argument);
}

TEST_CASE("involution symmetry on 50 random triples") {
  std::mt19937 rng(50);
  int done = 0;
  while (done < 50) {
    const Section s{random_element(rng, done % 2 == 1), random_element(rng, done % 2 == 1),
                    random_element(rng, done % 2 == 1)};
    SingularitySet a, b;
    try {
      a = classify_section(s);
    } catch (const DegenerateSection&) {
      continue;
    }
    b = classify_section(s.mirrored());
    CHECK(a == b);
    ++done;
  }
}

TEST_CASE("every stratum example classifies to its stratum") {
  std::mt19937 rng(31);
  for (const std::string& name : adjacency_nodes()) {
    for (int k = 0; k < 3; ++k) {
      StratumParams prm;
      prm.t = random_parameter(rng);
      prm.free = random_element(rng, false);
      prm.sign = k % 2 ? -1 : 1;
      prm.cusp = k % 2 ? Cusp::infinity : Cusp::zero;
      Section s;
      try {
        s = stratum_example(name, prm);
      } catch (const std::domain_error&) {
        continue;
      }
      const std::string got = classify_section(s).name();
      CHECK_MESSAGE((got == name || degenerates_to(name, got)), name << " gave " << got);
    }
    CHECK(classify_section(stratum_example(name, {})).name() == name);
  }
  CHECK_THROWS_AS(stratum_example("E8", {}), std::invalid_argument);
}

TEST_CASE("adjacency diagram") {
  CHECK(immediate_degenerations("4A4") == std::vector<std::string>{"A9+2A4", "4A4+A1"});
  CHECK(immediate_degenerations("2A9") == std::vector<std::string>{"Y^1_1,1+A9"});
  CHECK(immediate_generalizations("4A4+2A1") == std::vector<std::string>{"4A4+A1"});
  CHECK(degenerates_to("4A4", "W12+2A4"));
  CHECK_FALSE(degenerates_to("2A9", "4A4+A2"));
  CHECK_THROWS_AS(immediate_degenerations("E6"), std::invalid_argument);
}

TEST_CASE("curve verification suite") {
  int failed = 0;
  for (const CurveCheck& c : verify_all_curves())
    if (!c.passed) {
      ++failed;
      CHECK(c.name == "restricted discriminant, c = 1/2, b = 3");
    }
  CHECK(failed == 1);
  const std::string csv = plot_csv({q(1, 2), q(1), q(1, 2)}, -1, 1, 5);
  CHECK(csv.rfind("x,y1,y2,y3,section\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
