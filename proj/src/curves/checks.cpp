#include "sextic/curve_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sextic/classifier.hpp"
#include "sextic/trigonal.hpp"

namespace sextic::curves {

namespace {

// Multiplies a polynomial over Q(v) with polynomial coefficients by the lcm
// of all rational denominators.
Poly<QRat> clear_denominators(const Poly<QRat>& p) {
  mpz_class l = 1;
  for (const QRat& c : p.coeffs()) {
    if (!c.is_polynomial()) throw std::logic_error("clear_denominators: rational coefficient");
    for (const mpq_class& q : c.num().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return p.scaled(constant<QRat>(mpq_class(l)));
}

Poly<QRat> divide_exactly(const Poly<QRat>& p, const Poly<QRat>& d) {
  auto [q, r] = Poly<QRat>::divmod(p, d);
  if (!r.is_zero()) throw std::logic_error("expected an exact factor");
  return q;
}

QRat qrat(const QPoly& p) { return QRat(p); }

}  // namespace

RestrictedDiscriminants restricted_discriminant_checks() {
  RestrictedDiscriminants r;
  const QRat v = QRat::var(), half = constant<QRat>(1, 2);
  const QPoly V = QPoly::x();
  using P = Poly<QRat>;
  {
    const P g = section_restriction(half, v, half);
    const P h = clear_denominators(divide_exactly(g, P::monomial(constant<QRat>(1), 2)));
    r.first = discriminant(h);
    r.first_expected = qrat((V - QPoly::from_ints({3})).pow(3) * (V + QPoly::from_ints({3})).pow(3))
                           * constant<QRat>(16);
  }
  {
    const P g = section_restriction(v, constant<QRat>(3), half);
    const P h = clear_denominators(divide_exactly(g, P::monomial(constant<QRat>(1), 4)));
    r.second = discriminant(h);
    r.second_expected = qrat(QPoly::from_ints({-1, 2}).pow(5)) * constant<QRat>(12);
  }
  {
    const QRat a = inflection_a(v), b = inflection_b(v), c = inflection_c(v);
    const QRat q3 = qrat(QPoly::from_ints({-1, 1, 1}).pow(3));
    const P n = (-contact_polynomial(a, b, c)).scaled(q3);
    const P cube = P(std::vector<QRat>{-v, constant<QRat>(1)}).pow(3);
    const P cubic = divide_exactly(n, cube);
    r.third = discriminant(cubic);
    r.third_shape = qrat(V.pow(2) * QPoly::from_ints({4, 3}) * QPoly::from_ints({-3, 4}) *
                         QPoly::from_ints({-1, 1, 1}).pow(3));
    const QRat ratio = r.third / r.third_shape;
    r.third_is_multiple = ratio.is_polynomial() && ratio.num().degree() <= 0 && !ratio.is_zero();
    if (r.third_is_multiple) r.third_scalar = ratio.num().coeff(0);
  }
  return r;
}

namespace {

CurveCheck make(std::string name, bool ok, std::string expected, std::string computed) {
  return {std::move(name), ok, std::move(expected), std::move(computed)};
}

std::string yesno(bool b) { return b ? "holds" : "fails"; }

// Root of a polynomial in (lo, hi) by exact bisection, to width 2^-iters.
std::pair<mpq_class, mpq_class> isolate(const Poly<QSqrt5>& p, mpq_class lo, mpq_class hi,
                                        int iters) {
  int slo = p(QSqrt5(lo)).sign();
  for (int k = 0; k < iters; ++k) {
    mpq_class mid = (lo + hi) / 2;
    const int sm = p(QSqrt5(mid)).sign();
    if (sm == 0) return {mid, mid};
    if (sm == slo) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

bool near(double value, double target, int sig) {
  char a[64], b[64];
  std::snprintf(a, sizeof a, "%.*g", sig, value);
  std::snprintf(b, sizeof b, "%.*g", sig, target);
  return std::string(a) == b;
}

CurveCheck digression_check() {
  const Section s = double_tangent(QSqrt5(rational(1, 2)), 1);
  const std::string approx =
      "a~" + to_decimal(s.a, 5) + " b~" + to_decimal(s.b, 4) + " c~" + to_decimal(s.c, 3);
  bool ok = near(s.a.approx(), -161.05, 5) && near(s.b.approx(), -13.93, 4) &&
            near(s.c.approx(), 0.0448, 3);
  // Remaining intersections: the quadratic left after the two tangencies.
  const QSqrt5 t1(rational(1, 2)), t2 = epsilon_pm(1) * t1;
  using P = Poly<QSqrt5>;
  const P lin1(std::vector<QSqrt5>{-t1, QSqrt5(1)}), lin2(std::vector<QSqrt5>{-t2, QSqrt5(1)});
  auto [rest, rem] = P::divmod(contact_polynomial(s), (lin1 * lin2).pow(2));
  ok = ok && rem.is_zero() && rest.degree() == 2;
  std::string pts;
  if (ok) {
    const struct {
      double lo, hi, t, x;
    } expect[] = {{0.25, 0.3, 0.281, -0.0442}, {1.05, 1.15, 1.101, 0.0585}};
    for (const auto& e : expect) {
      auto [lo, hi] = isolate(rest, mpq_class(e.lo), mpq_class(e.hi), 40);
      const bool bracket = rest(QSqrt5(mpq_class(e.lo))).sign() * rest(QSqrt5(mpq_class(e.hi))).sign() < 0;
      const double t = mpq_class((lo + hi) / 2).get_d();
      const double x = t * t * (t - 1) / (t + 1);
      ok = ok && bracket && near(t, e.t, e.t > 1 ? 4 : 3) && near(x, e.x, 3);
      char buf[96];
      std::snprintf(buf, sizeof buf, " t~%.*g (x~%.3g)", e.t > 1 ? 4 : 3, t, x);
      pts += buf;
    }
  }
  const SingularitySet set = classify_section(s);
  ok = ok && set.name() == "4A4+2A1";
  return make("double tangent at t=1/2 (sign +)", ok,
              "a~-161.05 b~-13.93 c~0.0448, transversal at t~0.281 (x~-0.0442) and t~1.101 "
              "(x~0.0585), 4A4+2A1",
              approx + pts + ", " + set.name());
}

}  // namespace

std::vector<CurveCheck> verify_all_curves() {
  std::vector<CurveCheck> out;
  const QPoly p = trigonal_p(), q = trigonal_q();
  {
    const Poly<QRat> f = trigonal_f();
    const bool ok = f.degree() == 3 && f.coeff(3) == constant<QRat>(4) && p(0) == 1 && q(0) == 1;
    out.push_back(make("leading y^3 coefficient 4, p(0) = q(0) = 1", ok, "4, 1, 1",
                       to_string(f.coeff(3)) + ", " + mpq_class(p(0)).get_str() + ", " +
                           mpq_class(q(0)).get_str()));
  }
  {
    const QSqrt5 v = trigonal_eval(QSqrt5(0), QSqrt5(rational(1, 2)));
    out.push_back(make("f(0, 1/2) = 0", v.is_zero(), "0", to_string(v)));
  }
  {
    const QPoly d = discriminant_y(), e = expected_discriminant_y();
    out.push_back(make("discriminant in y", d == e, to_string(e), to_string(d)));
  }
  {
    const QPoly quad = QPoly::from_ints({-1, -11, 1});
    bool ok = true;
    for (int sgn : {1, -1}) ok = ok && horner(quad, x_pm(sgn)).is_zero();
    out.push_back(make("x+- = 11/2 +- 5 s5/2 are the simple roots", ok, "0, 0", yesno(ok)));
  }
  out.push_back(make("f(x(t), y(t)) = 0 identically", check_parametrization(), "0", yesno(check_parametrization())));
  {
    const QSqrt5 x1 = param_x(QSqrt5(1)), y1 = param_y(QSqrt5(1));
    const bool ok = x1.is_zero() && y1 == QSqrt5(-1) && trigonal_eval(x1, y1).is_zero();
    out.push_back(make("t = 1 lies under the cusp at (0, -1)", ok, "(0, -1)",
                       "(" + to_string(x1) + ", " + to_string(y1) + ")"));
  }
  out.push_back(make("x(t)^2 - 11x(t) - 1 ~ (t^2+t-1)^2 (t^2-4t-1)", check_vertical_tangents(),
                     "exact factor", yesno(check_vertical_tangents())));
  {
    bool ok = true;
    for (int sgn : {1, -1}) {
      const QSqrt5 x = param_x(t_pm(sgn)), xp = param_x(t_prime_pm(sgn));
      ok = ok && x == x_pm(sgn) && xp == x_pm(sgn);
    }
    out.push_back(make("x(t+-) = x(t'+-) = x+-", ok, "equal", yesno(ok)));
  }
  out.push_back(make("involution x -> -1/x, y -> y/x^2 and t -> -1/t", involution_checks(),
                     "invariant", yesno(involution_checks())));
  {
    bool ok = true;
    const long triples[][6] = {{3, 7, -2, 1, 5, 3}, {1, 2, 3, 1, 1, 2}, {-11, 2, 3, 1, 1, 2}};
    for (const auto& t : triples)
      ok = ok && section_transform_check(QSqrt5(rational(t[0], t[1])), QSqrt5(rational(t[2], t[3])),
                                         QSqrt5(rational(t[4], t[5])));
    ok = ok && section_transform_check(QSqrt5(1, 2), QSqrt5(rational(-1, 3), 1), QSqrt5(0, -1));
    out.push_back(make("section transform (a,b,c) -> (c,-b,a)", ok, "x^6 g(-1/x) = g'(x)", yesno(ok)));
  }
  {
    const Poly<QSqrt5> g = section_restriction(QSqrt5(rational(2, 3)), QSqrt5(5), QSqrt5(rational(-4, 7)));
    const QSqrt5 a(rational(2, 3)), c(rational(-4, 7));
    const QSqrt5 lc = (a + QSqrt5(1)) * (QSqrt5(2) * a - QSqrt5(1)) * (QSqrt5(2) * a - QSqrt5(1));
    const QSqrt5 g0 = (c + QSqrt5(1)) * (QSqrt5(2) * c - QSqrt5(1)) * (QSqrt5(2) * c - QSqrt5(1));
    const bool ok = g.degree() == 6 && g.lc() == lc && g(QSqrt5(0)) == g0;
    out.push_back(make("section restriction: lc (a+1)(2a-1)^2, g(0) = (c+1)(2c-1)^2", ok,
                       to_string(lc) + ", " + to_string(g0), to_string(g.lc()) + ", " + to_string(g(QSqrt5(0)))));
  }
  const RestrictedDiscriminants rd = restricted_discriminant_checks();
  out.push_back(make("restricted discriminant, a = c = 1/2", rd.first == rd.first_expected,
                     "16(b-3)^3(b+3)^3 = " + to_string(rd.first_expected, "b"), to_string(rd.first, "b")));
  out.push_back(make("restricted discriminant, c = 1/2, b = 3", rd.second == rd.second_expected,
                     "12(2a-1)^5 = " + to_string(rd.second_expected, "a"), to_string(rd.second, "a")));
  out.push_back(make("inflection family discriminant up to a constant", rd.third_is_multiple,
                     "const * t^2(3t+4)(4t-3)(t^2+t-1)^3",
                     rd.third_is_multiple ? "scalar " + rd.third_scalar.get_str()
                                          : to_string(rd.third, "t")));
  out.push_back(make("double-tangent identity in Q(t1, t2, b)", double_tangent_identity(), "identity",
                     yesno(double_tangent_identity())));
  {
    const QSqrt5 ep = epsilon_pm(1), em = epsilon_pm(-1);
    bool ok = ep * em == QSqrt5(1);
    for (int sgn : {1, -1}) ok = ok && epsilon_pm(sgn) == t_pm(sgn) / t_prime_pm(sgn);
    for (int sgn : {1, -1}) {
      const QSqrt5 e = epsilon_pm(sgn);
      ok = ok && (e * e + QSqrt5(3) * e + QSqrt5(1)).is_zero();
    }
    const QSqrt5 t1(rational(2, 5));
    ok = ok && double_tangent_ratio_check(t1, ep * t1) && !double_tangent_ratio_check(QSqrt5(1), QSqrt5(2));
    out.push_back(make("eps+- = t+-/t'+-, eps+ eps- = 1, ratio criterion", ok, "holds", yesno(ok)));
  }
  {
    const Section s = inflection_section(QSqrt5(rational(3, 4)));
    const Section e{QSqrt5(rational(3077, 10)), QSqrt5(rational(177, 5)), QSqrt5(rational(1, 2))};
    out.push_back(make("inflection tangent at t = 3/4", s == e, to_string(e), to_string(s)));
    const Section s2 = inflection_section(QSqrt5(rational(-4, 3)));
    out.push_back(make("inflection tangent at t = -4/3", s2 == e.mirrored(), to_string(e.mirrored()),
                       to_string(s2)));
  }
  {
    bool ok = true;
    for (long n : {2L, 3L, -5L, 7L})
      for (long d : {3L, 7L}) {
        const QSqrt5 t(rational(n, d));
        ok = ok && inflection_section(t) == inflection_by_linear_solve(t);
      }
    out.push_back(make("inflection formulas agree with the linear solve", ok, "equal", yesno(ok)));
  }
  {
    bool ok = true;
    std::string got;
    try {
      const Section s1 = tangent_section(QSqrt5(1), QSqrt5(rational(5, 2)));
      const Section s2 = tangent_section(QSqrt5(-1), QSqrt5(rational(-7, 3)));
      ok = s1.b == QSqrt5(-6) && s1.c == QSqrt5(-1) && s2.a == QSqrt5(-1) && s2.b == QSqrt5(6);
      for (long n : {2L, -3L, 5L}) {
        const QSqrt5 t(rational(n, 3));
        const Section a0 = tangent_through_cusp(t, Cusp::zero);
        const Section ai = tangent_through_cusp(QSqrt5(-1) / t, Cusp::infinity);
        ok = ok && a0.mirrored() == ai;
      }
      got = yesno(ok);
    } catch (const std::exception& e) {
      ok = false;
      got = e.what();
    }
    out.push_back(make("tangent families: t = +-1 and cusp tangents mirror", ok, "holds", got));
  }
  out.push_back(digression_check());
  {
    struct Golden {
      Section s;
      const char* name;
      bool reducible;
    };
    const QSqrt5 h(rational(1, 2));
    const Golden goldens[] = {
        {{QSqrt5(rational(-11, 2)), QSqrt5(3), h}, "W12+2A4", false},
        {{h, QSqrt5(-3), QSqrt5(rational(-11, 2))}, "W12+2A4", false},
        {{QSqrt5(rational(3077, 10)), QSqrt5(rational(177, 5)), h}, "A9+2A4+A2", false},
        {{h, QSqrt5(rational(-177, 5)), QSqrt5(rational(3077, 10))}, "A9+2A4+A2", false},
        {{h, QSqrt5(3), h}, "Y^1_1,1+A9", true},
        {{h, QSqrt5(-3), h}, "Y^1_1,1+A9", true},
        {{QSqrt5(rational(2, 3)), QSqrt5(rational(5, 7)), QSqrt5(rational(-3, 11))}, "4A4", false},
    };
    for (const Golden& g : goldens) {
      const SingularitySet set = classify_section(g.s);
      const bool ok = set.name() == g.name && set.reducible == g.reducible;
      out.push_back(make("classify " + to_string(g.s), ok,
                         std::string(g.name) + (g.reducible ? " (reducible)" : ""),
                         set.name() + (set.reducible ? " (reducible)" : "")));
    }
  }
  return out;
}

std::string plot_csv(const Section& s, double x0, double x1, int samples) {
  if (samples < 2) throw std::invalid_argument("plot_csv: need at least 2 samples");
  const QPoly p = trigonal_p(), q = trigonal_q();
  auto evald = [](const QPoly& poly, double x) {
    double r = 0;
    for (int i = poly.degree(); i >= 0; --i) r = r * x + mpq_class(poly.coeff(i)).get_d();
    return r;
  };
  const double a = s.a.approx(), b = s.b.approx(), c = s.c.approx();
  std::ostringstream out;
  out.precision(10);
  out << "x,y1,y2,y3,section\n";
  for (int k = 0; k < samples; ++k) {
    const double x = x0 + (x1 - x0) * k / (samples - 1);
    // y^3 + P y + Q = 0 with P = -3p/4, Q = q/4.
    const double P = -0.75 * evald(p, x), Q = 0.25 * evald(q, x);
    std::vector<double> roots;
    const double disc = -(4 * P * P * P + 27 * Q * Q);
    if (disc >= 0 && P < 0) {
      const double m = 2 * std::sqrt(-P / 3);
      const double arg = std::clamp(3 * Q / (P * m), -1.0, 1.0);
      const double th = std::acos(arg) / 3;
      for (int j = 0; j < 3; ++j) roots.push_back(m * std::cos(th - 2 * M_PI * j / 3));
    } else {
      const double d = Q * Q / 4 + P * P * P / 27;
      const double sq = std::sqrt(std::max(d, 0.0));
      roots.push_back(std::cbrt(-Q / 2 + sq) + std::cbrt(-Q / 2 - sq));
    }
    std::sort(roots.begin(), roots.end());
    out << x;
    for (int j = 0; j < 3; ++j) {
      out << ',';
      if (j < static_cast<int>(roots.size())) out << roots[j];
    }
    out << ',' << (a * x * x + b * x + c) << '\n';
  }
  return out.str();
}

}  // namespace sextic::curves
