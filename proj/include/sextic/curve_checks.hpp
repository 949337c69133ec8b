#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sextic/poly.hpp"
#include "sextic/sections.hpp"

namespace sextic::curves {

/// Outcome of one exact identity check.
struct CurveCheck {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
};

/// Discriminants of restricted equations, each taken after clearing the
/// coefficient denominators:
///  (i)   g(x)/x^2 on a = c = 1/2, in x over Q(b);
///  (ii)  g(x)/x^4 on c = 1/2, b = 3, in x over Q(a);
///  (iii) the cubic (t^2+t-1)^3 2(u+1)^2 (y(u)-s(u)) / (u-t)^3 for the
///        inflection tangent at t, in u over Q(t).
struct RestrictedDiscriminants {
  QRat first, first_expected;      // 16(b-3)^3(b+3)^3
  QRat second, second_expected;    // 12(2a-1)^5
  QRat third, third_shape;         // t^2(3t+4)(4t-3)(t^2+t-1)^3
  mpq_class third_scalar;          // third = scalar * shape
  bool third_is_multiple = false;
};
RestrictedDiscriminants restricted_discriminant_checks();

/// Every identity and golden value for the curve side, in a fixed order.
std::vector<CurveCheck> verify_all_curves();

/// Sample rows `x,y1,y2,y3,section` of the curve (real y-roots in
/// increasing order, blank when absent) and of the section over [x0, x1].
std::string plot_csv(const Section& s, double x0, double x1, int samples);

}  // namespace sextic::curves
