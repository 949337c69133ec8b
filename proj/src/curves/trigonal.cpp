#include "sextic/trigonal.hpp"

namespace sextic::curves {

QPoly trigonal_p() { return QPoly::from_ints({1, 12, 14, -12, 1}); }

QPoly trigonal_q() {
  return QPoly::from_ints({1, 0, 1}) * QPoly::from_ints({1, 18, 74, -18, 1});
}

Poly<QRat> trigonal_f() {
  const Poly<QRat> x(QRat::var());
  return trigonal_eval<Poly<QRat>>(x, Poly<QRat>::x());
}

QPoly discriminant_y() {
  const QRat d = discriminant(trigonal_f());
  if (!d.is_polynomial()) throw std::logic_error("discriminant_y: not a polynomial");
  return d.num().scaled(mpq_class(1) / d.den().lc());
}

QPoly expected_discriminant_y() {
  return QPoly::monomial(mpq_class(746496), 5) * QPoly::from_ints({-1, -11, 1});
}

QRat param_x() { return param_x(QRat::var()); }
QRat param_y() { return param_y(QRat::var()); }

QSqrt5 t_pm(int sign) { return QSqrt5(rational(-1, 2), rational(-sign, 2)); }
QSqrt5 t_prime_pm(int sign) { return QSqrt5(2, sign); }
QSqrt5 epsilon_pm(int sign) { return QSqrt5(rational(-3, 2), rational(sign, 2)); }
QSqrt5 x_pm(int sign) { return QSqrt5(rational(11, 2), rational(5 * sign, 2)); }

bool check_parametrization() {
  const QRat t = QRat::var();
  return trigonal_eval(param_x(t), param_y(t)).is_zero();
}

bool check_vertical_tangents() {
  const QRat x = param_x();
  const QPoly n = x.num(), d = x.den();
  const QPoly lhs = n * n - n * d.scaled(11) - d * d;
  const QPoly rhs = QPoly::from_ints({-1, 1, 1}).pow(2) * QPoly::from_ints({-1, -4, 1});
  return lhs == rhs.scaled(lhs.lc());
}

bool involution_checks() {
  const QRat x = QRat::var();
  const Poly<QRat> y = Poly<QRat>::x();
  const QRat minus_inv = constant<QRat>(-1) / x;
  const Poly<QRat> lhs =
      trigonal_eval(Poly<QRat>(minus_inv), y.scaled(constant<QRat>(1) / x.pow(2))).scaled(x.pow(6));
  const Poly<QRat> rhs = trigonal_eval(Poly<QRat>(x), y);
  if (lhs != rhs) return false;
  const QRat t = QRat::var(), s = constant<QRat>(-1) / t;
  const QRat xt = param_x(t), yt = param_y(t);
  return param_x(s) == constant<QRat>(-1) / xt && param_y(s) == yt / (xt * xt);
}

Poly<QSqrt5> section_restriction(const QSqrt5& a, const QSqrt5& b, const QSqrt5& c) {
  using P = Poly<QSqrt5>;
  const P s(std::vector<QSqrt5>{c, b, a});
  return trigonal_eval(P::x(), s);
}

Poly<QRat> section_restriction(const QRat& a, const QRat& b, const QRat& c) {
  using P = Poly<QRat>;
  const P s(std::vector<QRat>{c, b, a});
  return trigonal_eval(P::x(), s);
}

bool section_transform_check(const QSqrt5& a, const QSqrt5& b, const QSqrt5& c) {
  const Poly<QSqrt5> g = section_restriction(a, b, c);
  const Poly<QSqrt5> h = section_restriction(c, -b, a);
  // x^6 g(-1/x): coefficient of x^(6-i) is (-1)^i g_i.
  std::vector<QSqrt5> flipped(7, QSqrt5(0));
  for (int i = 0; i <= g.degree(); ++i)
    flipped[6 - i] = i % 2 ? -g.coeff(i) : g.coeff(i);
  return Poly<QSqrt5>(std::move(flipped)) == h;
}

}  // namespace sextic::curves
