#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace sextic::curves {

/// mpq_class from numerator/denominator, canonicalized.
mpq_class rational(long num, long den = 1);
/// Parses `p`, `p/q` or a decimal such as `-0.125`.
mpq_class parse_rational(std::string_view text);

/// u + v*sqrt(5) with rational u, v. Rationals are the elements with v = 0.
class QSqrt5 {
 public:
  QSqrt5() : u_(0), v_(0) {}
  QSqrt5(long n) : u_(n), v_(0) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(mpq_class u, mpq_class v = 0) : u_(std::move(u)), v_(std::move(v)) {}  // NOLINT

  static QSqrt5 sqrt5() { return QSqrt5(0, 1); }

  const mpq_class& u() const { return u_; }
  const mpq_class& v() const { return v_; }
  bool is_rational() const { return sgn(v_) == 0; }
  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }

  QSqrt5 conj() const { return QSqrt5(u_, -v_); }
  /// (u + v s5)(u - v s5) = u^2 - 5 v^2.
  mpq_class norm() const { return u_ * u_ - 5 * v_ * v_; }
  /// Sign of the real number u + v*sqrt(5).
  int sign() const;

  QSqrt5 operator-() const { return QSqrt5(-u_, -v_); }
  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  /// Throws std::domain_error on division by zero.
  QSqrt5& operator/=(const QSqrt5& o);
  QSqrt5 inverse() const;

  friend QSqrt5 operator+(QSqrt5 a, const QSqrt5& b) { return a += b; }
  friend QSqrt5 operator-(QSqrt5 a, const QSqrt5& b) { return a -= b; }
  friend QSqrt5 operator*(QSqrt5 a, const QSqrt5& b) { return a *= b; }
  friend QSqrt5 operator/(QSqrt5 a, const QSqrt5& b) { return a /= b; }
  friend bool operator==(const QSqrt5& a, const QSqrt5& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const QSqrt5& a, const QSqrt5& b) { return !(a == b); }
  friend bool operator<(const QSqrt5& a, const QSqrt5& b) { return (a - b).sign() < 0; }

  /// Rigorous enclosure [lo, hi] of the real value, width 2^-bits * |v|.
  std::pair<mpq_class, mpq_class> enclosure(unsigned bits = 200) const;
  /// Midpoint of the 200-bit enclosure.
  double approx() const;

 private:
  mpq_class u_, v_;
};

/// Literal syntax `p/q`, `p/q + r/s*s5`, `-s5`, `3*s5`; decimals allowed.
/// Throws std::invalid_argument.
QSqrt5 parse_qsqrt5(std::string_view text);
std::string to_string(const QSqrt5& x);
/// Decimal approximation with `digits` significant figures.
std::string to_decimal(const QSqrt5& x, int digits = 6);

}  // namespace sextic::curves
