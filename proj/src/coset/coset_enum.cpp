#include "sextic/coset_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace sextic::coset {

CosetTable::CosetTable(std::size_t generators, std::vector<std::int32_t> rows,
                       TableStatus status)
    : gens_(generators), rows_(std::move(rows)), status_(status) {
  if (gens_ && rows_.size() % (2 * gens_) != 0)
    throw std::invalid_argument("coset table rows have the wrong width");
}

std::int32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  std::int32_t c = static_cast<std::int32_t>(coset);
  for (Letter l : w.letters()) {
    if (l.generator() >= gens_) return kUndefined;
    c = act(static_cast<std::size_t>(c), l);
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

namespace {

constexpr std::int32_t U = CosetTable::kUndefined;

using Code = std::uint32_t;
using Relator = std::vector<Code>;

Relator codes(const Word& w) {
  Relator r;
  r.reserve(w.size());
  for (Letter l : w.letters()) r.push_back(l.code());
  return r;
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup,
             const EnumerationLimits& limits)
      : cols_(2 * p.generator_count()), max_(std::max<std::size_t>(limits.max_cosets, 1)) {
    for (const Word& w : p.relators())
      if (!w.empty()) rels_.push_back(codes(w));
    for (const Word& w : subgroup)
      if (!w.empty()) subgroup_.push_back(codes(w));
    if (limits.strategy == Strategy::felsch) build_rotations();
    new_coset();
  }

  bool run_hlt();
  bool run_felsch();
  CosetTable standardized() const;

  std::size_t max_live = 1;
  std::size_t total_defined = 1;

 private:
  std::size_t cols_;
  std::size_t max_;
  std::vector<Relator> rels_;
  std::vector<Relator> subgroup_;
  // rotations_[x]: cyclic conjugates of every relator and its inverse that
  // start with column x (Felsch only).
  std::vector<std::vector<Relator>> rotations_;

  std::vector<std::int32_t> tab_;
  std::vector<std::int32_t> parent_;
  std::size_t live_ = 0;
  bool full_ = false;
  std::size_t changes_ = 0;
  bool record_deductions_ = false;
  std::vector<std::pair<std::int32_t, Code>> deductions_;
  std::vector<std::int32_t> queue_;

  std::size_t allocated() const { return parent_.size(); }
  std::int32_t& entry(std::int32_t c, Code x) {
    return tab_[static_cast<std::size_t>(c) * cols_ + x];
  }
  bool alive(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  std::int32_t new_coset() {
    auto c = static_cast<std::int32_t>(allocated());
    parent_.push_back(c);
    tab_.insert(tab_.end(), cols_, U);
    ++live_;
    max_live = std::max(max_live, live_);
    return c;
  }

  void set(std::int32_t c, Code x, std::int32_t d) {
    ++changes_;
    entry(c, x) = d;
    entry(d, x ^ 1U) = c;
    if (record_deductions_) deductions_.emplace_back(c, x);
  }

  // Returns false (and raises full_) when the limit is reached.
  bool define(std::int32_t c, Code x) {
    if (allocated() >= max_) {
      full_ = true;
      return false;
    }
    std::int32_t d = new_coset();
    ++total_defined;
    set(c, x, d);
    return true;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    std::int32_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    std::int32_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    --live_;
    ++changes_;
    queue_.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int32_t g = queue_[i];
      for (Code x = 0; x < cols_; ++x) {
        const std::int32_t d = entry(g, x);
        if (d == U) continue;
        entry(d, x ^ 1U) = U;
        const std::int32_t mu = rep(g), nu = rep(d);
        if (entry(mu, x) != U) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x ^ 1U) != U) {
          merge(mu, entry(nu, x ^ 1U));
        } else {
          set(mu, x, nu);
        }
      }
    }
  }

  // Scans r from coset c. With fill, gaps are closed by new definitions;
  // without, only deductions and coincidences are made.
  void scan(std::int32_t c, const Relator& r, bool fill) {
    if (r.empty()) return;
    std::int32_t f = c, b = c;
    std::size_t i = 0, j = r.size();  // letters [i, j) remain unscanned
    while (true) {
      while (i < j && entry(f, r[i]) != U) f = entry(f, r[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, r[j - 1] ^ 1U) != U) b = entry(b, r[--j] ^ 1U);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, r[i], b);
        return;
      }
      if (!fill || !define(f, r[i])) return;
    }
  }

  // Lookahead: scans everything at every live coset without defining, once
  // or until nothing changes.
  void close_all(bool to_fixpoint = true) {
    bool saved = record_deductions_;
    record_deductions_ = false;
    while (true) {
      const std::size_t before = changes_;
      for (const Relator& s : subgroup_) scan(rep(0), s, false);
      for (std::int32_t c = 0; c < static_cast<std::int32_t>(allocated()); ++c)
        for (const Relator& r : rels_) {
          if (!alive(c)) break;
          scan(c, r, false);
        }
      if (!to_fixpoint || changes_ == before) break;
    }
    record_deductions_ = saved;
  }

  // Renumbers live cosets 0.. in order. Returns the new index of the first
  // live coset at or after `pos`.
  std::int32_t compact(std::int32_t pos) {
    std::vector<std::int32_t> map(allocated(), U);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < allocated(); ++c)
      if (alive(static_cast<std::int32_t>(c))) map[c] = next++;
    std::vector<std::int32_t> tab(static_cast<std::size_t>(next) * cols_, U);
    std::int32_t new_pos = next;
    for (std::size_t c = 0; c < allocated(); ++c) {
      if (map[c] == U) continue;
      if (static_cast<std::int32_t>(c) >= pos && new_pos == next) new_pos = map[c];
      for (Code x = 0; x < cols_; ++x) {
        std::int32_t d = tab_[c * cols_ + x];
        tab[static_cast<std::size_t>(map[c]) * cols_ + x] = d == U ? U : map[static_cast<std::size_t>(d)];
      }
    }
    tab_ = std::move(tab);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    deductions_.clear();
    return new_pos;
  }

  // After lookahead / compaction: is there room to keep going?
  bool has_room() const {
    const std::size_t slack = std::max<std::size_t>(1, max_ / 16);
    return allocated() + slack <= max_ || (max_ < 32 && allocated() < max_);
  }

  std::int32_t first_gap(std::int32_t from) const {
    for (auto c = static_cast<std::size_t>(from); c < allocated(); ++c) {
      if (parent_[c] != static_cast<std::int32_t>(c)) continue;
      for (Code x = 0; x < cols_; ++x)
        if (tab_[c * cols_ + x] == U) return static_cast<std::int32_t>(c);
    }
    return U;
  }

  void build_rotations() {
    rotations_.assign(cols_, {});
    for (const Relator& r : rels_) {
      Relator inv(r.rbegin(), r.rend());
      for (Code& x : inv) x ^= 1U;
      for (const Relator* w : {static_cast<const Relator*>(&r), static_cast<const Relator*>(&inv)})
        for (std::size_t k = 0; k < w->size(); ++k) {
          Relator rot(w->begin() + static_cast<std::ptrdiff_t>(k), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
          auto& bucket = rotations_[rot.front()];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
            bucket.push_back(std::move(rot));
        }
    }
  }

  void process_deductions() {
    constexpr std::size_t kStackCap = 1 << 20;
    while (!deductions_.empty()) {
      if (deductions_.size() > kStackCap) {
        deductions_.clear();
        close_all();
        return;
      }
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const Relator& r : rotations_[x]) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
      const std::int32_t d = entry(c, x);
      if (d == U || !alive(d)) continue;
      for (const Relator& r : rotations_[x ^ 1U]) {
        if (!alive(d)) break;
        scan(d, r, false);
      }
    }
  }
};

bool Enumerator::run_hlt() {
  // Subgroup generators close at coset 0.
  while (true) {
    full_ = false;
    for (const Relator& s : subgroup_) scan(0, s, true);
    if (!full_) break;
    close_all(false);
    compact(0);
    if (!has_room()) return false;
  }
  std::int32_t a = 0;
  while (true) {
    while (a < static_cast<std::int32_t>(allocated())) {
      if (!alive(a)) {
        ++a;
        continue;
      }
      full_ = false;
      for (const Relator& r : rels_) {
        scan(a, r, true);
        if (full_ || !alive(a)) break;
      }
      if (!full_ && alive(a))
        for (Code x = 0; x < cols_; ++x)
          if (entry(a, x) == U && !define(a, x)) break;
      if (full_) {
        close_all(false);
        a = compact(a);
        if (!has_room()) return false;
        continue;
      }
      ++a;
    }
    close_all();
    a = first_gap(0);
    if (a == U) return true;
  }
}

bool Enumerator::run_felsch() {
  record_deductions_ = true;
  while (true) {
    full_ = false;
    for (const Relator& s : subgroup_) scan(rep(0), s, true);
    process_deductions();
    if (!full_) break;
    close_all(false);
    compact(0);
    if (!has_room()) return false;
  }
  std::int32_t from = 0;
  while (true) {
    std::int32_t c = first_gap(from);
    if (c == U) {
      close_all();
      c = first_gap(0);
      if (c == U) return true;
    }
    from = c;
    Code x = 0;
    while (entry(c, x) != U) ++x;
    if (!define(c, x)) {
      close_all(false);
      compact(0);
      from = 0;
      if (!has_room()) return false;
      continue;
    }
    process_deductions();
  }
}

CosetTable Enumerator::standardized() const {
  // Breadth-first renumbering from coset 0 (which is always live).
  std::vector<std::int32_t> order{0};
  std::vector<std::int32_t> map(allocated(), U);
  map[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto c = static_cast<std::size_t>(order[i]);
    for (Code x = 0; x < cols_; ++x) {
      const std::int32_t d = tab_[c * cols_ + x];
      if (map[static_cast<std::size_t>(d)] == U) {
        map[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
      }
    }
  }
  std::vector<std::int32_t> rows(order.size() * cols_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Code x = 0; x < cols_; ++x)
      rows[i * cols_ + x] =
          map[static_cast<std::size_t>(tab_[static_cast<std::size_t>(order[i]) * cols_ + x])];
  CosetTable t(cols_ / 2, std::move(rows), TableStatus::complete);
  t.max_live = max_live;
  t.total_defined = total_defined;
  return t;
}

}  // namespace

CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens,
                     const EnumerationLimits& limits) {
  for (const Word& w : subgroup_gens)
    if (w.generator_bound() > p.generator_count())
      throw std::invalid_argument("subgroup generator uses an unknown generator");
  if (p.generator_count() == 0) return CosetTable(0, {}, TableStatus::complete);
  Enumerator e(p, subgroup_gens, limits);
  const bool ok = limits.strategy == Strategy::felsch ? e.run_felsch() : e.run_hlt();
  if (!ok) {
    CosetTable t(p.generator_count(), {}, TableStatus::overflow);
    t.max_live = e.max_live;
    t.total_defined = e.total_defined;
    return t;
  }
  return e.standardized();
}

std::uint64_t subgroup_index(const Presentation& p, const std::vector<Word>& subgroup_gens,
                             const EnumerationLimits& limits) {
  CosetTable t = enumerate(p, subgroup_gens, limits);
  if (!t.complete()) throw OverflowError(limits.max_cosets);
  return t.size();
}

std::uint64_t group_order(const Presentation& p, const EnumerationLimits& limits) {
  return subgroup_index(p, {}, limits);
}

std::string verify_table(const CosetTable& t, const Presentation& p,
                         const std::vector<Word>& subgroup_gens) {
  if (!t.complete()) return "table is not complete";
  if (t.generator_count() != p.generator_count()) return "generator count mismatch";
  const std::size_t n = t.size();
  for (std::size_t c = 0; c < n; ++c)
    for (std::uint32_t x = 0; x < t.column_count(); ++x) {
      const std::int32_t d = t.at(c, x);
      if (d < 0 || static_cast<std::size_t>(d) >= n)
        return "entry out of range at coset " + std::to_string(c);
      if (t.at(static_cast<std::size_t>(d), x ^ 1U) != static_cast<std::int32_t>(c))
        return "column " + std::to_string(x) + " is not inverse to its partner at coset " +
               std::to_string(c);
    }
  for (std::size_t k = 0; k < p.relators().size(); ++k)
    for (std::size_t c = 0; c < n; ++c)
      if (t.trace(c, p.relators()[k]) != static_cast<std::int32_t>(c))
        return "relator " + std::to_string(k) + " does not close at coset " + std::to_string(c);
  for (std::size_t k = 0; k < subgroup_gens.size(); ++k)
    if (t.trace(0, subgroup_gens[k]) != 0)
      return "subgroup generator " + std::to_string(k) + " moves coset 0";
  return {};
}

CosetTable standardize(const CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("standardize needs a complete table");
  if (t.generator_count() == 0) return t;
  const std::size_t cols = t.column_count();
  std::vector<std::int32_t> order{0};
  std::vector<std::int32_t> map(t.size(), CosetTable::kUndefined);
  map[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t x = 0; x < cols; ++x) {
      const std::int32_t d = t.at(static_cast<std::size_t>(order[i]), x);
      if (map[static_cast<std::size_t>(d)] == CosetTable::kUndefined) {
        map[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
      }
    }
  std::vector<std::int32_t> rows(order.size() * cols);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t x = 0; x < cols; ++x)
      rows[i * cols + x] = map[static_cast<std::size_t>(t.at(static_cast<std::size_t>(order[i]), x))];
  CosetTable out(t.generator_count(), std::move(rows), TableStatus::complete);
  out.max_live = t.max_live;
  out.total_defined = t.total_defined;
  return out;
}

std::vector<Permutation> permutation_images(const CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("permutation_images needs a complete table");
  std::vector<Permutation> out(t.generator_count(), Permutation(t.size()));
  for (std::size_t g = 0; g < t.generator_count(); ++g)
    for (std::size_t c = 0; c < t.size(); ++c)
      out[g][c] = t.at(c, static_cast<std::uint32_t>(2 * g));
  return out;
}

Permutation evaluate(const std::vector<Permutation>& gens, const Word& w) {
  if (gens.empty()) return {0};
  const std::size_t n = gens.front().size();
  std::vector<Permutation> inv(gens.size(), Permutation(n));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) inv[g][static_cast<std::size_t>(gens[g][i])] = static_cast<std::int32_t>(i);
  Permutation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t c = static_cast<std::int32_t>(i);
    for (Letter l : w.letters()) {
      const auto& p = l.sign() > 0 ? gens.at(l.generator()) : inv.at(l.generator());
      c = p[static_cast<std::size_t>(c)];
    }
    out[i] = c;
  }
  return out;
}

}  // namespace sextic::coset
