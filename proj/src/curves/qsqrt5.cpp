#include "sextic/qsqrt5.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sextic::curves {

mpq_class rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class parse_rational(std::string_view raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  auto bad = [&]() {
    return std::invalid_argument("not a rational number: \"" + std::string(raw) + "\"");
  };
  if (text.empty()) throw bad();
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '+' && ch != '/' &&
        ch != '.')
      throw bad();
  if (text.front() == '+') text.erase(0, 1);
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    if (text.find('/') != std::string::npos) throw bad();
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t places = text.size() - dot - 1;
    if (digits.empty() || digits == "-") throw bad();
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) throw bad();
  q.canonicalize();
  return q;
}

int QSqrt5::sign() const {
  const int su = sgn(u_), sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  const mpq_class uu = u_ * u_, vv = 5 * v_ * v_;
  if (uu == vv) return 0;
  return uu > vv ? su : sv;
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  if (is_rational() && o.is_rational()) {
    u_ *= o.u_;
    return *this;
  }
  mpq_class u = u_ * o.u_ + 5 * v_ * o.v_;
  mpq_class v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QSqrt5 QSqrt5::inverse() const {
  if (is_zero()) throw std::domain_error("QSqrt5: division by zero");
  if (is_rational()) return QSqrt5(1 / u_);
  const mpq_class n = norm();
  return QSqrt5(u_ / n, -v_ / n);
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  if (o.is_rational()) {
    if (sgn(o.u_) == 0) throw std::domain_error("QSqrt5: division by zero");
    u_ /= o.u_;
    v_ /= o.u_;
    return *this;
  }
  return *this *= o.inverse();
}

std::pair<mpq_class, mpq_class> QSqrt5::enclosure(unsigned bits) const {
  if (is_rational()) return {u_, u_};
  mpz_class scale = 1;
  scale <<= bits;
  mpz_class s = 5 * scale * scale;
  mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
  const mpq_class lo_root(s, scale), hi_root(s + 1, scale);
  mpq_class a = u_ + v_ * lo_root, b = u_ + v_ * hi_root;
  a.canonicalize();
  b.canonicalize();
  if (a > b) std::swap(a, b);
  return {a, b};
}

double QSqrt5::approx() const {
  auto [lo, hi] = enclosure();
  mpq_class mid = (lo + hi) / 2;
  return mid.get_d();
}

QSqrt5 parse_qsqrt5(std::string_view raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  const auto pos = text.find("s5");
  if (pos == std::string::npos) return QSqrt5(parse_rational(text));
  if (pos + 2 != text.size())
    throw std::invalid_argument("s5 must end the literal: \"" + std::string(raw) + "\"");
  std::string head = text.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;)
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  std::string upart, vpart = head;
  if (split != std::string::npos) {
    upart = head.substr(0, split);
    vpart = head.substr(split);
  }
  mpq_class v;
  if (vpart.empty() || vpart == "+")
    v = 1;
  else if (vpart == "-")
    v = -1;
  else
    v = parse_rational(vpart);
  return QSqrt5(upart.empty() ? mpq_class(0) : parse_rational(upart), v);
}

std::string to_string(const QSqrt5& x) {
  if (x.is_rational()) return x.u().get_str();
  std::string v;
  const mpq_class av = abs(x.v());
  if (av != 1) v = av.get_str() + "*";
  v += "s5";
  if (sgn(x.u()) == 0) return (sgn(x.v()) < 0 ? "-" : "") + v;
  return x.u().get_str() + (sgn(x.v()) < 0 ? " - " : " + ") + v;
}

std::string to_decimal(const QSqrt5& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x.approx());
  return buf;
}

}  // namespace sextic::curves
