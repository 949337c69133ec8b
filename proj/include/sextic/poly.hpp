#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/qsqrt5.hpp"

namespace sextic::curves {

template <class F>
class Poly;
template <class F>
class RatFunc;

/// Image of a rational number in a coefficient field or ring.
template <class T>
struct Embed {
  static T from(const mpq_class& q) { return T(q); }
};
template <class F>
struct Embed<Poly<F>> {
  static Poly<F> from(const mpq_class& q) { return Poly<F>(Embed<F>::from(q)); }
};
template <class F>
struct Embed<RatFunc<F>> {
  static RatFunc<F> from(const mpq_class& q) { return RatFunc<F>(Embed<F>::from(q)); }
};

template <class T>
T constant(const mpq_class& q) {
  return Embed<T>::from(q);
}
template <class T>
T constant(long n, long d = 1) {
  return Embed<T>::from(rational(n, d));
}

template <class T>
T ipow(const T& x, unsigned n) {
  T r = constant<T>(1);
  for (unsigned k = 0; k < n; ++k) r = r * x;
  return r;
}

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline bool is_zero(const QSqrt5& x) { return x.is_zero(); }
template <class F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}
template <class F>
bool is_zero(const RatFunc<F>& r) {
  return r.is_zero();
}

/// Dense univariate polynomial over a field F; c[i] is the coefficient of
/// x^i and the leading coefficient is nonzero.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F c) {
    if (!curves::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return monomial(constant<F>(1), 1); }
  static Poly monomial(F c, int n) {
    std::vector<F> v(n + 1, constant<F>(0));
    v[n] = std::move(c);
    return Poly(std::move(v));
  }
  /// Builds a polynomial from integer coefficients, constant term first.
  static Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<F> v;
    for (long n : coeffs) v.push_back(constant<F>(n));
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  F coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : constant<F>(0);
  }
  const std::vector<F>& coeffs() const { return c_; }
  F lc() const { return is_zero() ? constant<F>(0) : c_.back(); }

  Poly operator-() const {
    Poly r = *this;
    for (F& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), constant<F>(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), constant<F>(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, constant<F>(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (curves::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const F& s) const {
    Poly r = *this;
    for (F& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  Poly pow(unsigned n) const {
    Poly r(constant<F>(1));
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
  }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly q, r = a;
    const F inv = constant<F>(1) / b.lc();
    std::vector<F> qc;
    if (a.degree() >= b.degree()) qc.assign(a.degree() - b.degree() + 1, constant<F>(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree();
      const F k = r.lc() * inv;
      qc[shift] = k;
      for (int i = 0; i <= b.degree(); ++i)
        r.c_[i + shift] = r.c_[i + shift] - k * b.c_[i];
      r.c_.pop_back();
      r.trim();
    }
    q = Poly(std::move(qc));
    return {q, r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  bool divides(const Poly& a) const { return (a % *this).is_zero(); }

  Poly monic() const { return is_zero() ? *this : scaled(constant<F>(1) / lc()); }
  Poly derivative() const {
    std::vector<F> r;
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * constant<F>(static_cast<long>(i)));
    return Poly(std::move(r));
  }
  F operator()(const F& x) const {
    F r = constant<F>(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  /// Largest k with (x - root)^k dividing this (nonzero) polynomial.
  int multiplicity(const F& root) const {
    if (is_zero()) throw std::domain_error("Poly: multiplicity in zero polynomial");
    const Poly lin(std::vector<F>{-root, constant<F>(1)});
    Poly cur = *this;
    int k = 0;
    while (true) {
      auto [q, r] = divmod(cur, lin);
      if (!r.is_zero()) return k;
      cur = std::move(q);
      ++k;
    }
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && curves::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Value of p at x in a ring T containing the coefficients of p.
template <class T, class F>
T horner(const Poly<F>& p, const T& x, T (*lift)(const F&)) {
  T r = constant<T>(0);
  for (int i = p.degree(); i >= 0; --i) r = r * x + lift(p.coeffs()[i]);
  return r;
}
template <class T>
T horner(const Poly<mpq_class>& p, const T& x) {
  return horner<T, mpq_class>(p, x, [](const mpq_class& q) { return constant<T>(q); });
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Res(a, b) by the Euclidean remainder sequence.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) return constant<F>(0);
  F acc = constant<F>(1);
  while (true) {
    const int n = a.degree(), m = b.degree();
    if (n == 0) {
      F r = acc;
      for (int k = 0; k < m; ++k) r = r * a.lc();
      return r;
    }
    if (m == 0) {
      F r = acc;
      for (int k = 0; k < n; ++k) r = r * b.lc();
      return r;
    }
    Poly<F> rem = a % b;
    if (rem.is_zero()) return constant<F>(0);
    if ((n * m) % 2 == 1) acc = -acc;
    for (int k = 0; k < n - rem.degree(); ++k) acc = acc * b.lc();
    a = std::move(b);
    b = std::move(rem);
  }
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
template <class F>
F discriminant(const Poly<F>& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant of a constant");
  F r = resultant(f, f.derivative()) / f.lc();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

/// Yun's squarefree decomposition: pairs (P_k, k) with P_k monic,
/// squarefree, pairwise coprime and f = lc(f) * prod P_k^k. Factors equal
/// to 1 are omitted.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.degree() == 0) return out;
  Poly<F> fp = f.derivative();
  Poly<F> a = gcd(f, fp);
  Poly<F> b = f / a, c = fp / a;
  Poly<F> d = c - b.derivative();
  for (int k = 1; b.degree() > 0; ++k) {
    Poly<F> g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, k});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  return out;
}

/// Quotient of polynomials over F in lowest terms, monic denominator.
template <class F>
class RatFunc {
 public:
  RatFunc() : den_(constant<F>(1)) {}
  explicit RatFunc(F c) : num_(std::move(c)), den_(constant<F>(1)) {}
  explicit RatFunc(Poly<F> n) : num_(std::move(n)), den_(constant<F>(1)) {}
  RatFunc(Poly<F> n, Poly<F> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static RatFunc var() { return RatFunc(Poly<F>::x()); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc pow(unsigned n) const { return RatFunc(num_.pow(n), den_.pow(n)); }

  /// Quotient rule, reduced.
  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }
  /// Throws std::domain_error at a pole.
  F operator()(const F& x) const {
    const F d = den_(x);
    if (curves::is_zero(d)) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_(x) / d;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  RatFunc(Poly<F> n, Poly<F> d, bool) : num_(std::move(n)), den_(std::move(d)) {}
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>(constant<F>(1));
      return;
    }
    const Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const F inv = constant<F>(1) / den_.lc();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  Poly<F> num_, den_;
};

/// Value of a rational function over Q at x in a field T containing Q.
template <class T>
T evaluate(const RatFunc<mpq_class>& r, const T& x) {
  const T d = horner<T>(r.den(), x);
  if (is_zero(d)) throw std::domain_error("RatFunc: evaluation at a pole");
  return horner<T>(r.num(), x) / d;
}

using QPoly = Poly<mpq_class>;
using QRat = RatFunc<mpq_class>;

/// Human-readable form, highest degree first, e.g. `4*x^3 - 3*x + 1`.
std::string to_string(const QPoly& p, const std::string& var = "x");
std::string to_string(const Poly<QSqrt5>& p, const std::string& var = "x");
std::string to_string(const QRat& r, const std::string& var = "t");

}  // namespace sextic::curves
