#include "sextic/poly.hpp"

namespace sextic::curves {

namespace {

template <class F>
std::string format_poly(const Poly<F>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const F c = p.coeff(i);
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    const bool compound = !c.is_rational() && sgn(c.u()) != 0;
    bool negative = false;
    if (!compound && !cs.empty() && cs.front() == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

}  // namespace

std::string to_string(const QPoly& p, const std::string& var) {
  std::vector<QSqrt5> c;
  for (const mpq_class& q : p.coeffs()) c.emplace_back(q);
  return format_poly(Poly<QSqrt5>(std::move(c)), var);
}

std::string to_string(const Poly<QSqrt5>& p, const std::string& var) {
  return format_poly(p, var);
}

std::string to_string(const QRat& r, const std::string& var) {
  if (r.is_polynomial()) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

}  // namespace sextic::curves
