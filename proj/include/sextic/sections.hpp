#pragma once

#include <initializer_list>
#include <string>

#include "sextic/poly.hpp"
#include "sextic/qsqrt5.hpp"
#include "sextic/trigonal.hpp"

namespace sextic::curves {

/// The section y = a x^2 + b x + c.
struct Section {
  QSqrt5 a, b, c;
  friend bool operator==(const Section&, const Section&) = default;
  /// Image under the involution x -> -1/x: (c, -b, a).
  Section mirrored() const { return {c, -b, a}; }
};

std::string to_string(const Section& s);

/// Value at t of the integer polynomial with coefficients c (constant first).
template <class T>
T int_poly(const T& t, std::initializer_list<long> c) {
  T r = constant<T>(0);
  for (auto it = c.end(); it != c.begin();) r = r * t + constant<T>(*--it);
  return r;
}

/// Tangency at the smooth point with parameter t (t not 0, +-1, t+-).
template <class T>
T tangent_a(const T& b, const T& t) {
  const T num = -b * int_poly(t, {-1, 0, 2, 1}) + int_poly(t, {-3, 0, -5, -5, 0, 1});
  return num / (constant<T>(2) * t * t * int_poly(t, {-1, 1}) * int_poly(t, {-1, 1, 1}));
}
template <class T>
T tangent_c(const T& b, const T& t) {
  const T num = b * t * t * int_poly(t, {1, -2, 0, 1}) + int_poly(t, {1, 0, -5, 5, 0, 3});
  return -num / (constant<T>(2) * int_poly(t, {1, 1}) * int_poly(t, {-1, 1, 1}));
}

/// Inflection tangency at t (t not 0, t+-).
template <class T>
T inflection_a(const T& t) {
  return int_poly(t, {11, 12, 0, -5, 0, 3, 1}) /
         (constant<T>(2) * ipow(int_poly(t, {-1, 1, 1}), 3));
}
template <class T>
T inflection_b(const T& t) {
  return constant<T>(-3) * int_poly(t, {1, 0, 1}) * int_poly(t, {1, -3, -1, 3, 1}) /
         ipow(int_poly(t, {-1, 1, 1}), 3);
}
template <class T>
T inflection_c(const T& t) {
  return -int_poly(t, {1, -3, 0, 5, 0, -12, 11}) /
         (constant<T>(2) * ipow(int_poly(t, {-1, 1, 1}), 3));
}

/// 2(u+1)^2 (s(u) - y(u)) as a polynomial in the curve parameter u, where
/// s(u) = a x(u)^2 + b x(u) + c. Its roots are the intersection parameters.
template <class F>
Poly<F> contact_polynomial(const F& a, const F& b, const F& c) {
  using P = Poly<F>;
  const P u = P::x(), one(constant<F>(1));
  const P s = (u.pow(4) * (u - one).pow(2)).scaled(constant<F>(2) * a) +
              (u.pow(2) * (u.pow(2) - one)).scaled(constant<F>(2) * b) +
              (u + one).pow(2).scaled(constant<F>(2) * c);
  const P y = P::from_ints({1, 0, 1}) * P::from_ints({1, 2, -6, -2, 1});
  return s - y;
}
Poly<QSqrt5> contact_polynomial(const Section& s);
/// Order of contact of the section with the curve at the point t.
int contact_order(const Section& s, const QSqrt5& t);

enum class Cusp { zero, infinity };

/// Section tangent at t with one free coordinate: b for regular t, a for
/// t = 1 (where (b, c) = (-6, -1)), c for t = -1 (where (a, b) = (-1, 6)).
/// Throws std::domain_error for t in {0, t+-}; postchecks the tangency.
Section tangent_section(const QSqrt5& t, const QSqrt5& free);
/// Tangent at t passing through the cusp at t = 0 (c = 1/2) or at
/// t = infinity (a = 1/2).
Section tangent_through_cusp(const QSqrt5& t, Cusp which);
/// Tangent at t and at eps+- * t (sign = +1 or -1). Exact over Q(s5).
Section double_tangent(const QSqrt5& t, int sign);
/// True iff t2/t1 is eps+ or eps-. Throws std::domain_error for excluded
/// inputs and std::logic_error if the underlying identity fails.
bool double_tangent_ratio_check(const QSqrt5& t1, const QSqrt5& t2);
/// With a_i, c_i the tangent coefficients at t_i for a common b:
/// (a1-a2) t1^2 t2^2 (t1-1)(t2-1) + (c1-c2)(t1+1)(t2+1)
///   = 3 (t1-t2)^3 (t1^2 + 3 t1 t2 + t2^2) / ((t1^2+t1-1)(t2^2+t2-1))
/// as an identity in Q(t1, t2, b).
bool double_tangent_identity();
/// Inflection tangent at t from the closed formulas; postchecks contact 3.
Section inflection_section(const QSqrt5& t);
/// Same, by solving s = y, s' = y', s'' = y'' at t (t not -1).
Section inflection_by_linear_solve(const QSqrt5& t);

}  // namespace sextic::curves
