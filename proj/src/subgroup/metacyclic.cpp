#include "sextic/metacyclic.hpp"

#include <set>
#include <stdexcept>

namespace sextic {

MetacyclicElement metacyclic_mul(MetacyclicElement x, MetacyclicElement y) {
  const int k = (y.n % 2 == 0) ? x.k : (5 - x.k) % 5;
  return {x.n + y.n, (k + y.k) % 5};
}

MetacyclicElement metacyclic_inv(MetacyclicElement x) {
  const int k = (x.n % 2 == 0) ? (5 - x.k) % 5 : x.k;
  return {-x.n, k};
}

MetacyclicElement metacyclic_eval(const std::vector<MetacyclicElement>& images, const Word& w) {
  MetacyclicElement x;
  for (Letter l : w.letters()) {
    const MetacyclicElement y = images.at(l.generator());
    x = metacyclic_mul(x, l.sign() > 0 ? y : metacyclic_inv(y));
  }
  return x;
}

namespace {

std::optional<std::uint64_t> order_or_none(const Presentation& p,
                                           const coset::EnumerationLimits& limits) {
  coset::CosetTable t = coset::enumerate(p, {}, limits);
  if (!t.complete()) return std::nullopt;
  return t.size();
}

}  // namespace

MetacyclicReport verify_metacyclic_model(const Presentation& p,
                                         const coset::EnumerationLimits& limits) {
  if (p.generator_count() != 2)
    throw std::invalid_argument("metacyclic model expects generators a, b");
  MetacyclicReport rep;
  const std::vector<MetacyclicElement> images{{1, 0}, {1, 1}};

  rep.relators_hold = true;
  for (const Word& r : p.relators())
    if (!(metacyclic_eval(images, r) == MetacyclicElement{})) rep.relators_hold = false;
  rep.lines.push_back(std::string("relators vanish in Z x| Z5: ") +
                      (rep.relators_hold ? "yes" : "no"));

  const Word a = Word::generator(0), b = Word::generator(1);
  const MetacyclicElement kgen = metacyclic_eval(images, b * a.inverse());
  // Conjugates of kgen lie in the n = 0 slice; close under products there.
  std::set<int> kernel{0};
  std::vector<MetacyclicElement> conj;
  for (const MetacyclicElement& by : images)
    for (const MetacyclicElement& g : {by, metacyclic_inv(by)})
      conj.push_back(metacyclic_mul(metacyclic_mul(g, kgen), metacyclic_inv(g)));
  conj.push_back(kgen);
  for (bool grew = true; grew;) {
    grew = false;
    for (int k : std::set<int>(kernel))
      for (const MetacyclicElement& c : conj) {
        if (c.n != 0) throw std::logic_error("kernel element outside the Z5 slice");
        if (kernel.insert((k + c.k) % 5).second) grew = true;
      }
  }
  rep.kernel_order = kernel.size();
  rep.surjective = kernel.size() == 5 && images[0] == MetacyclicElement{1, 0};
  rep.lines.push_back("kernel generated by conjugates of b a^-1 has order " +
                      std::to_string(rep.kernel_order));

  Presentation proj = p;
  proj.add_relator((a * b.pow(2)).pow(2));
  rep.projective_order = order_or_none(proj, limits);
  Presentation q = p;
  q.add_relator(a.pow(2));
  rep.quotient_by_a2_order = order_or_none(q, limits);
  auto show = [](const std::optional<std::uint64_t>& o) {
    return o ? std::to_string(*o) : std::string("overflow");
  };
  rep.lines.push_back("order with (a b^2)^2 added: " + show(rep.projective_order));
  rep.lines.push_back("order with a^2 added: " + show(rep.quotient_by_a2_order));
  return rep;
}

}  // namespace sextic
