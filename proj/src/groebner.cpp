#include "formcone/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "formcone/errors.hpp"

namespace formcone {

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : elems_)
    if (!g.is_zero() && g.lead_monomial().is_one() && g.lead_monomial().component() == 0)
      return true;
  return false;
}

namespace {

// Index of the first divisor whose leading monomial divides m, or -1.
long find_divisor(const Monomial& m, const std::vector<const Polynomial*>& divs) {
  for (std::size_t i = 0; i < divs.size(); ++i)
    if (divides(divs[i]->lead_monomial(), m)) return static_cast<long>(i);
  return -1;
}

Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& divs) {
  if (f.is_zero() || divs.empty()) return f;
  const auto& k = f.field();
  Polynomial work = f;
  Polynomial rem(f.ring());
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    long j = find_divisor(lt.mono, divs);
    if (j < 0) {
      rem.push_back_unchecked(work.pop_lead());
      continue;
    }
    const Polynomial& g = *divs[static_cast<std::size_t>(j)];
    Scalar c = k.div(lt.coef, g.lead_coef());
    Monomial m = lt.mono / g.lead_monomial();
    work.sub_multiple(c, m, g);
  }
  return rem;
}

std::vector<const Polynomial*> pointers(const std::vector<Polynomial>& v) {
  std::vector<const Polynomial*> out;
  out.reserve(v.size());
  for (const auto& p : v)
    if (!p.is_zero()) out.push_back(&p);
  return out;
}

bool is_module_ring(const RingPtr& r) { return r->order().position_over_term; }

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const auto& d : divisors)
    if (!same_ring(d.ring(), f.ring()) && !d.is_zero())
      throw MathError("normal form: ambient ring or order mismatch");
  return reduce(f, pointers(divisors));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (g.ring() && f.ring() && !same_ring(g.ring(), f.ring()))
    throw MathError("normal form: ambient ring or order mismatch");
  return reduce(f, pointers(g.elements()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& a = f.lead_monomial();
  const Monomial& b = g.lead_monomial();
  if (a.component() != b.component()) return Polynomial(f.ring());
  Monomial l = lcm(a, b);
  const auto& k = f.field();
  Polynomial s = f.mul_term(l / a, k.inv(f.lead_coef()));
  s.sub_multiple(k.inv(g.lead_coef()), l / b, g);
  return s;
}

namespace {

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, const GbOptions& opts)
      : ring_(ring), opts_(opts), module_(is_module_ring(ring)),
        pairs_(PairLess{&ring->order()}) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    for (const auto& f : gens) {
      if (!same_ring(f.ring(), ring_) && !f.is_zero())
        throw MathError("buchberger: generator outside the ambient ring");
      Polynomial h = reduce(f.in_ring(ring_), active_pointers()).monic();
      if (h.is_zero()) continue;
      if (add(std::move(h))) return unit();
    }
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      auto [deg, l, i, j] = *it;
      pairs_.erase(it);
      if (++reductions_ > opts_.max_reductions)
        throw BudgetExceeded("Groebner basis: reduction budget of " +
                             std::to_string(opts_.max_reductions) + " exhausted");
      Polynomial h = reduce(s_polynomial(store_[i], store_[j]), active_pointers()).monic();
      if (h.is_zero()) continue;
      if (add(std::move(h))) return unit();
    }
    return finish();
  }

 private:
  using PairKey = std::tuple<std::uint32_t, Monomial, std::size_t, std::size_t>;
  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      auto c = ord->compare(std::get<1>(a), std::get<1>(b));
      if (c != 0) return c < 0;
      return std::tie(std::get<2>(a), std::get<3>(a)) < std::tie(std::get<2>(b), std::get<3>(b));
    }
  };

  std::vector<const Polynomial*> active_pointers() const {
    std::vector<const Polynomial*> out;
    for (std::size_t i = 0; i < store_.size(); ++i)
      if (active_[i]) out.push_back(&store_[i]);
    return out;
  }

  // Gebauer-Moeller installation of a new element. Returns true if the
  // element is a unit (the ideal is everything).
  bool add(Polynomial h) {
    if (h.lead_monomial().is_one() && !module_) {
      store_.assign(1, std::move(h));
      return true;
    }
    const std::size_t hi = store_.size();
    const Monomial lh = h.lead_monomial();
    store_.push_back(std::move(h));
    active_.push_back(false);

    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = store_[g].lead_monomial();
      if (lg.component() != lh.component()) continue;
      cands.push_back({g, lcm(lg, lh), !module_ && coprime(lg, lh)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Cand& c = cands[a];
      bool drop = false;
      if (!c.coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
          if (divides(cands[b].l, c.l)) drop = true;
        for (std::size_t b = 0; b < kept.size() && !drop; ++b)
          if (divides(kept[b].l, c.l)) drop = true;
      }
      if (!drop) kept.push_back(c);
    }
    // Chain criterion on the old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const auto& [deg, l, i, j] = *it;
      if (divides(lh, l) && !(lcm(store_[i].lead_monomial(), lh) == l) &&
          !(lcm(store_[j].lead_monomial(), lh) == l))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (const auto& c : kept)
      if (!c.coprime) pairs_.insert({c.l.degree(), c.l, c.g, hi});
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && divides(lh, store_[g].lead_monomial())) active_[g] = false;
    active_[hi] = true;
    return false;
  }

  GroebnerBasis unit() {
    std::vector<Polynomial> one{Polynomial::constant(ring_, 1)};
    return GroebnerBasis(ring_, std::move(one), true);
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < store_.size(); ++i)
      if (active_[i]) g.push_back(store_[i]);
    // Interreduce tails; leading monomials are already minimal.
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<const Polynomial*> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(&g[j]);
      Term lt = g[i].lead();
      Polynomial tail = g[i];
      tail.pop_lead();
      Polynomial r = reduce(tail, others);
      Polynomial lead = Polynomial::term(ring_, lt.mono, lt.coef);
      g[i] = (lead + r).monic();
    }
    const auto& ord = ring_->order();
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(g), true);
  }

  RingPtr ring_;
  GbOptions opts_;
  bool module_;
  std::vector<Polynomial> store_;
  std::vector<bool> active_;
  std::set<PairKey, PairLess> pairs_;
  std::uint64_t reductions_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const GbOptions& opts) {
  return Buchberger(ring, opts).run(gens);
}

bool is_groebner(const std::vector<Polynomial>& g) {
  auto divs = pointers(g);
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = i + 1; j < divs.size(); ++j) {
      if (divs[i]->lead_monomial().component() != divs[j]->lead_monomial().component()) continue;
      if (!reduce(s_polynomial(*divs[i], *divs[j]), divs).is_zero()) return false;
    }
  return true;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw MathError("division by the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw MathError("division: ambient ring mismatch");
  const auto& k = f.field();
  Polynomial q(f.ring());
  Polynomial r = f;
  while (!r.is_zero()) {
    const Term& lt = r.lead();
    if (!divides(g.lead_monomial(), lt.mono)) throw MathError("inexact polynomial division");
    Scalar c = k.div(lt.coef, g.lead_coef());
    Monomial m = lt.mono / g.lead_monomial();
    q += Polynomial::term(f.ring(), m, c);
    r.sub_multiple(c, m, g);
  }
  return q;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::string FreeModuleElement::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < components.size(); ++i)
    s += (i ? ", " : "") + components[i].str();
  return s + "]";
}

FreeModuleElement unit_vector(const RingPtr& ring, std::size_t rank, std::size_t i) {
  FreeModuleElement v;
  v.components.assign(rank, Polynomial(ring));
  v.components[i] = Polynomial::constant(ring, 1);
  return v;
}

Polynomial pack(const FreeModuleElement& v, const RingPtr& module_ring, std::uint32_t offset) {
  std::vector<Term> terms;
  for (std::size_t c = 0; c < v.components.size(); ++c)
    for (const auto& t : v.components[c].terms()) {
      Monomial m = t.mono;
      m.set_component(offset + static_cast<std::uint32_t>(c));
      terms.push_back({m, t.coef});
    }
  return Polynomial::from_terms(module_ring, std::move(terms));
}

FreeModuleElement unpack(const Polynomial& p, const RingPtr& ring, std::size_t rank,
                         std::uint32_t offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : p.terms()) {
    std::uint32_t c = t.mono.component();
    if (c < offset || c >= offset + rank) continue;
    Monomial m = t.mono;
    m.set_component(0);
    parts[c - offset].push_back({m, t.coef});
  }
  FreeModuleElement v;
  for (auto& part : parts) v.components.push_back(Polynomial::from_terms(ring, std::move(part)));
  return v;
}

GroebnerBasis module_groebner(const std::vector<FreeModuleElement>& gens, const RingPtr& ring,
                              const GbOptions& opts) {
  RingPtr mr = ring->module_ring();
  std::vector<Polynomial> packed;
  for (const auto& g : gens) packed.push_back(pack(g, mr));
  return buchberger(packed, mr, opts);
}

Polynomial module_normal_form(const FreeModuleElement& v, const GroebnerBasis& g) {
  return normal_form(pack(v, g.ring()), g);
}

std::vector<FreeModuleElement> syzygy_basis(const std::vector<FreeModuleElement>& columns,
                                            const std::vector<Polynomial>& modulo,
                                            const GbOptions& opts) {
  if (columns.empty()) return {};
  const std::size_t s = columns[0].rank();
  const std::size_t r = columns.size();
  RingPtr ring;
  for (const auto& c : columns) {
    if (c.rank() != s) throw MathError("syzygy_basis: rank mismatch among columns");
    for (const auto& p : c.components)
      if (p.ring()) ring = p.ring();
  }
  for (const auto& h : modulo)
    if (h.ring()) ring = h.ring();
  if (!ring) throw MathError("syzygy_basis: no ambient ring");
  RingPtr mr = ring->module_ring();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial p = pack(columns[i], mr);
    Monomial tag(ring->size());
    tag.set_component(static_cast<std::uint32_t>(s + i));
    p += Polynomial::term(mr, tag, 1);
    gens.push_back(std::move(p));
  }
  for (const auto& h : modulo) {
    if (h.is_zero()) continue;
    for (std::size_t j = 0; j < s; ++j) {
      FreeModuleElement v = unit_vector(ring, s, j);
      v.components[j] = h;
      gens.push_back(pack(v, mr));
    }
  }
  GroebnerBasis gb = buchberger(gens, mr, opts);
  std::vector<FreeModuleElement> out;
  for (const auto& g : gb.elements())
    if (g.lead_monomial().component() >= s) out.push_back(unpack(g, ring, r, static_cast<std::uint32_t>(s)));
  return out;
}

}  // namespace formcone
