#include "sextic/sections.hpp"

#include <stdexcept>

namespace sextic::curves {

std::string to_string(const Section& s) {
  return "(a, b, c) = (" + to_string(s.a) + ", " + to_string(s.b) + ", " + to_string(s.c) + ")";
}

Poly<QSqrt5> contact_polynomial(const Section& s) { return contact_polynomial(s.a, s.b, s.c); }

int contact_order(const Section& s, const QSqrt5& t) {
  return contact_polynomial(s).multiplicity(t);
}

namespace {

void require_admissible(const QSqrt5& t, std::initializer_list<QSqrt5> excluded,
                        const char* op) {
  for (const QSqrt5& e : excluded)
    if (t == e) throw std::domain_error(std::string(op) + ": excluded parameter t = " + to_string(t));
}

void postcheck(const Section& s, const QSqrt5& t, int order, const char* op) {
  const Poly<QSqrt5> n = contact_polynomial(s);
  if (n.is_zero() || n.multiplicity(t) < order)
    throw std::logic_error(std::string(op) + ": contact of order " + std::to_string(order) +
                           " at t = " + to_string(t) + " fails for " + to_string(s));
}

}  // namespace

Section tangent_section(const QSqrt5& t, const QSqrt5& free) {
  Section s;
  if (t == QSqrt5(1)) {
    s = {free, QSqrt5(-6), QSqrt5(-1)};
  } else if (t == QSqrt5(-1)) {
    s = {QSqrt5(-1), QSqrt5(6), free};
  } else {
    require_admissible(t, {QSqrt5(0), t_pm(1), t_pm(-1)}, "tangent_section");
    s = {tangent_a(free, t), free, tangent_c(free, t)};
  }
  postcheck(s, t, 2, "tangent_section");
  return s;
}

Section tangent_through_cusp(const QSqrt5& t, Cusp which) {
  const QSqrt5 half(rational(1, 2));
  const QSqrt5 q = int_poly(t, {-1, 1, 1});
  Section s;
  if (which == Cusp::zero) {
    require_admissible(t, {QSqrt5(0), QSqrt5(1), t_pm(1), t_pm(-1)}, "tangent_through_cusp");
    const QSqrt5 tm = t - QSqrt5(1);
    s.a = int_poly(t, {11, 3, -2, -1, 1}) / (QSqrt5(2) * tm * tm * q);
    s.b = QSqrt5(-3) * int_poly(t, {-1, 2, 0, 1}) / (tm * q);
    s.c = half;
  } else {
    require_admissible(t, {QSqrt5(0), QSqrt5(-1), t_pm(1), t_pm(-1)}, "tangent_through_cusp");
    const QSqrt5 tp = t + QSqrt5(1);
    s.a = half;
    s.b = QSqrt5(-3) * int_poly(t, {1, 0, 2, 1}) / (tp * q);
    s.c = -int_poly(t, {1, 1, -2, -3, 11}) / (QSqrt5(2) * tp * tp * q);
  }
  postcheck(s, t, 2, "tangent_through_cusp");
  if ((which == Cusp::zero ? s.c : s.a) != half)
    throw std::logic_error("tangent_through_cusp: cusp condition fails");
  return s;
}

Section double_tangent(const QSqrt5& t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("double_tangent: sign must be +1 or -1");
  const QSqrt5 tp = t_pm(sign), tm = t_pm(-sign), tq = t_prime_pm(sign);
  const QSqrt5 ep = epsilon_pm(sign), em = epsilon_pm(-sign);
  require_admissible(t, {QSqrt5(0), tp, tm, tq}, "double_tangent");
  const QSqrt5 num = QSqrt5(-3) * (t * t + (QSqrt5(3) * em + QSqrt5(1)) * t - em) *
                     (t * t - ep * t - em) * (t + tp);
  const QSqrt5 den = (t - tp) * (t - tm) * (t - tm) * (t - tq) * (t - tq);
  const QSqrt5 b = num / den;
  const QSqrt5 t2 = ep * t;
  // Both tangency points share the section; use one where the tangent
  // formulas are regular.
  const QSqrt5 base = (t == QSqrt5(1) || t == QSqrt5(-1)) ? t2 : t;
  const Section s{tangent_a(b, base), b, tangent_c(b, base)};
  postcheck(s, t, 2, "double_tangent");
  postcheck(s, t2, 2, "double_tangent");
  return s;
}

bool double_tangent_identity() {
  using K = RatFunc<QRat>;  // Q(t2)(t1)
  const K t1 = K::var(), t2(QRat::var());
  const K one = constant<K>(1);
  auto lhs = [&](const K& b) {
    const K da = tangent_a(b, t1) - tangent_a(b, t2);
    const K dc = tangent_c(b, t1) - tangent_c(b, t2);
    return da * t1 * t1 * t2 * t2 * (t1 - one) * (t2 - one) + dc * (t1 + one) * (t2 + one);
  };
  const K diff = t1 - t2;
  const K rhs = constant<K>(3) * diff * diff * diff * (t1 * t1 + constant<K>(3) * t1 * t2 + t2 * t2) /
                ((t1 * t1 + t1 - one) * (t2 * t2 + t2 - one));
  // The left side is affine in b, so two values of b decide the identity.
  return lhs(constant<K>(0)) == rhs && lhs(constant<K>(1)) == rhs;
}

bool double_tangent_ratio_check(const QSqrt5& t1, const QSqrt5& t2) {
  for (const QSqrt5& t : {t1, t2})
    require_admissible(t, {QSqrt5(0), t_pm(1), t_pm(-1)}, "double_tangent_ratio_check");
  if (t1 == t2) throw std::domain_error("double_tangent_ratio_check: t1 = t2");
  static const bool identity = double_tangent_identity();
  if (!identity) throw std::logic_error("double-tangent identity fails");
  const QSqrt5 r = t2 / t1;
  return r == epsilon_pm(1) || r == epsilon_pm(-1);
}

Section inflection_section(const QSqrt5& t) {
  require_admissible(t, {QSqrt5(0), t_pm(1), t_pm(-1)}, "inflection_section");
  const Section s{inflection_a(t), inflection_b(t), inflection_c(t)};
  postcheck(s, t, 3, "inflection_section");
  return s;
}

Section inflection_by_linear_solve(const QSqrt5& t) {
  require_admissible(t, {QSqrt5(0), QSqrt5(-1), t_pm(1), t_pm(-1)}, "inflection_by_linear_solve");
  static const QRat X = param_x(), X1 = X.derivative(), X2 = X1.derivative();
  static const QRat Y = param_y(), Y1 = Y.derivative(), Y2 = Y1.derivative();
  const QSqrt5 x = evaluate(X, t), x1 = evaluate(X1, t), x2 = evaluate(X2, t);
  const QSqrt5 y = evaluate(Y, t), y1 = evaluate(Y1, t), y2 = evaluate(Y2, t);
  // Rows: s = y, s' = y', s'' = y'' in the unknowns (a, b, c).
  //   [x^2            x    1] [a]   [y  ]
  //   [2 x x'         x'   0] [b] = [y' ]
  //   [2x'^2 + 2x x'' x''  0] [c]   [y'']
  const QSqrt5 m21 = QSqrt5(2) * x * x1, m31 = QSqrt5(2) * (x1 * x1 + x * x2);
  const QSqrt5 det = m21 * x2 - x1 * m31;
  if (det.is_zero()) throw std::domain_error("inflection_by_linear_solve: singular system");
  Section s;
  s.a = (y1 * x2 - x1 * y2) / det;
  s.b = (m21 * y2 - m31 * y1) / det;
  s.c = y - s.a * x * x - s.b * x;
  return s;
}

}  // namespace sextic::curves
