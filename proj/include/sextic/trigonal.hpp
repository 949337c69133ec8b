#pragma once

#include "sextic/poly.hpp"
#include "sextic/qsqrt5.hpp"

namespace sextic::curves {

/// Trigonal curve f(x, y) = 4y^3 - 3y p(x) + q(x) with two A4 cusps, one
/// over x = 0 at y = 1/2 and one over x = infinity.
QPoly trigonal_p();  // x^4 - 12x^3 + 14x^2 + 12x + 1
QPoly trigonal_q();  // (x^2 + 1)(x^4 - 18x^3 + 74x^2 + 18x + 1)

/// f(x, y) evaluated in any commutative ring T containing Q.
template <class T>
T trigonal_eval(const T& x, const T& y) {
  static const QPoly p = trigonal_p(), q = trigonal_q();
  return constant<T>(4) * y * y * y - constant<T>(3) * y * horner<T>(p, x) + horner<T>(q, x);
}

/// f as a polynomial in y with coefficients in Q(x); coefficient i of y^i.
Poly<QRat> trigonal_f();

/// Discriminant of f with respect to y, as a polynomial in x.
QPoly discriminant_y();
/// 2^10 3^6 x^5 (x^2 - 11x - 1).
QPoly expected_discriminant_y();

/// Rational parametrization x(t) = t^2(t-1)/(t+1),
/// y(t) = (t^2+1)(t^4-2t^3-6t^2+2t+1) / (2(t+1)^2).
template <class T>
T param_x(const T& t) {
  const T one = constant<T>(1);
  return t * t * (t - one) / (t + one);
}
template <class T>
T param_y(const T& t) {
  const T one = constant<T>(1);
  const T t2 = t * t;
  const T quartic = t2 * t2 - constant<T>(2) * t2 * t - constant<T>(6) * t2 +
                    constant<T>(2) * t + one;
  return (t2 + one) * quartic / (constant<T>(2) * (t + one) * (t + one));
}
QRat param_x();
QRat param_y();

/// Special parameter values: t+- = -1/2 -+ s5/2 (tangency over the vertical
/// tangents), t'+- = 2 +- s5 (the other points there), eps+- = (-3 +- s5)/2.
QSqrt5 t_pm(int sign);
QSqrt5 t_prime_pm(int sign);
QSqrt5 epsilon_pm(int sign);
/// Vertical tangents x+- = 11/2 +- 5 s5/2.
QSqrt5 x_pm(int sign);

/// f(x(t), y(t)) vanishes identically.
bool check_parametrization();
/// The numerator of x(t)^2 - 11 x(t) - 1 is (t^2+t-1)^2 (t^2-4t-1).
bool check_vertical_tangents();
/// x^6 f(-1/x, y/x^2) = f(x, y), and x(-1/t) = -1/x(t), y(-1/t) = y(t)/x(t)^2.
bool involution_checks();

/// g(x) = f(x, a x^2 + b x + c), of degree at most 6 with leading
/// coefficient (a+1)(2a-1)^2 and g(0) = (c+1)(2c-1)^2.
Poly<QSqrt5> section_restriction(const QSqrt5& a, const QSqrt5& b, const QSqrt5& c);
/// Same over Q(v) for sections whose coefficients are rational functions
/// of one parameter v.
Poly<QRat> section_restriction(const QRat& a, const QRat& b, const QRat& c);

/// The involution carries the section (a, b, c) to (c, -b, a):
/// x^6 g_{a,b,c}(-1/x) = g_{c,-b,a}(x).
bool section_transform_check(const QSqrt5& a, const QSqrt5& b, const QSqrt5& c);

}  // namespace sextic::curves
