#include "formcone/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "formcone/errors.hpp"
#include "formcone/linalg.hpp"

namespace formcone {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, GbOptions opts)
    : ring_(std::move(ring)), opts_(opts) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw MathError("ideal generator outside the ambient ring");
    gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(gens_, ring_, opts_); });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, gb()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gb().elements())
    if (!contains(g)) return false;
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) throw MathError("ideal comparison across rings");
  return a.gb() == b.gb();
}

std::shared_ptr<const Ideal> make_base(RingPtr ring, std::vector<Polynomial> gens, GbOptions opts) {
  return std::make_shared<const Ideal>(std::move(ring), std::move(gens), opts);
}

namespace {

std::vector<Polynomial> with_base(std::vector<Polynomial> gens,
                                  const std::shared_ptr<const Ideal>& base) {
  if (base)
    for (const auto& b : base->gb().elements()) gens.push_back(b);
  return gens;
}

}  // namespace

PresentedIdeal::PresentedIdeal(RingPtr ring, std::vector<Polynomial> gens,
                               std::shared_ptr<const Ideal> base, GbOptions opts)
    : base_(std::move(base)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
  if (base_ && !same_ring(base_->ring(), ring)) throw MathError("base ideal lives in another ring");
  full_ = Ideal(std::move(ring), with_base(gens_, base_), opts);
}

PresentedIdeal PresentedIdeal::with_generators(std::vector<Polynomial> gens) const {
  return PresentedIdeal(ring(), std::move(gens), base_, options());
}

std::string PresentedIdeal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
  return s + ")";
}

namespace {

void check_compatible(const PresentedIdeal& i, const PresentedIdeal& j, const char* op) {
  if (!same_ring(i.ring(), j.ring()))
    throw MathError(std::string(op) + ": ambient ring mismatch");
  const auto& a = i.base();
  const auto& b = j.base();
  if (a == b) return;
  bool a_zero = !a || a->is_zero();
  bool b_zero = !b || b->is_zero();
  if (a_zero && b_zero) return;
  if (a && b && *a == *b) return;
  throw MathError(std::string(op) + ": base ideal mismatch");
}

}  // namespace

PresentedIdeal ideal_sum(const PresentedIdeal& i, const PresentedIdeal& j) {
  check_compatible(i, j, "ideal_sum");
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return i.with_generators(std::move(gens));
}

PresentedIdeal ideal_product(const PresentedIdeal& i, const PresentedIdeal& j) {
  check_compatible(i, j, "ideal_product");
  std::vector<Polynomial> gens;
  for (const auto& f : i.generators())
    for (const auto& g : j.generators()) gens.push_back(f * g);
  return i.with_generators(std::move(gens));
}

PresentedIdeal ideal_power(const PresentedIdeal& q, unsigned n) {
  PresentedIdeal acc = q.with_generators({Polynomial::constant(q.ring(), 1)});
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Polynomial> gens;
    // Multiply the reduced basis of the previous power by the generators of q.
    const auto& prev = k == 0 ? acc.generators() : acc.gb().elements();
    for (const auto& f : prev)
      for (const auto& g : q.generators()) gens.push_back(f * g);
    acc = q.with_generators(std::move(gens));
  }
  return acc;
}

std::vector<Monomial> standard_monomials(const Ideal& i) {
  const auto& gb = i.gb();
  const std::size_t n = i.ring()->size();
  if (gb.is_unit_ideal()) return {};
  // A pure power of every variable must be a leading monomial.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gb.elements()) {
    const Monomial& m = g.lead_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) ++support, var = v;
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (auto b : bound)
    if (b == 0) throw MathError("quotient is not finite-dimensional");
  std::vector<Monomial> out;
  Monomial m(n);
  auto standard = [&](const Monomial& x) {
    for (const auto& g : gb.elements())
      if (divides(g.lead_monomial(), x)) return false;
    return true;
  };
  // Standard monomials form an order ideal, so prune on the first failure.
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      if (!standard(m)) break;
      rec(v + 1);
    }
    m.set(v, 0);
  };
  rec(0);
  return out;
}

std::optional<std::size_t> colength(const Ideal& i) {
  auto d = krull_dim(i);
  if (d && *d > 0) return std::nullopt;
  return standard_monomials(i).size();
}

std::string fresh_name(const std::string& stem, const std::vector<std::string>& names) {
  std::string s = stem;
  while (std::find(names.begin(), names.end(), s) != names.end()) s = "_" + s;
  return s;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw MathError("intersection: ambient ring mismatch");
  const RingPtr& r = a.ring();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_zero() || b.is_zero()) return Ideal(r, {}, a.options());
  std::vector<std::string> names{fresh_name("t", r->names())};
  names.insert(names.end(), r->names().begin(), r->names().end());
  RingPtr rt = Ring::make(r->field(), names, MonomialOrder::block(1));
  std::vector<std::size_t> up(r->size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;
  Polynomial t = Polynomial::variable(rt, 0);
  Polynomial one_minus_t = Polynomial::constant(rt, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.gb().elements()) gens.push_back(t * f.map_variables(rt, up));
  for (const auto& g : b.gb().elements()) gens.push_back(one_minus_t * g.map_variables(rt, up));
  GroebnerBasis gb = buchberger(gens, rt, a.options());
  std::vector<std::size_t> down(rt->size(), 0);
  for (std::size_t i = 1; i < rt->size(); ++i) down[i] = i - 1;
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if (!g.uses_variable(0)) out.push_back(g.map_variables(r, down));
  return Ideal(r, std::move(out), a.options());
}

namespace {

// Colon by linear algebra when P/a is finite-dimensional and small: (a : f)/a
// is the kernel of multiplication by f on the standard monomials.
std::optional<Ideal> colon_by_kernel(const Ideal& a, const Polynomial& f) {
  constexpr std::size_t kMaxBasis = 400;
  const auto& gb = a.gb();
  const std::size_t n = a.ring()->size();
  std::vector<bool> pure(n, false);
  for (const auto& g : gb.elements()) {
    const Monomial& m = g.lead_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) ++support, var = v;
    if (support == 1) pure[var] = true;
  }
  if (std::find(pure.begin(), pure.end(), false) != pure.end()) return std::nullopt;
  auto basis = standard_monomials(a);
  if (basis.size() > kMaxBasis) return std::nullopt;
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j].exponents(), j);
  Matrix m(a.ring()->field(), basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Polynomial image = a.reduce(f.mul_term(basis[j], 1));
    for (const auto& t : image.terms()) m.at(index.at(t.mono.exponents()), j) = t.coef;
  }
  std::vector<Polynomial> gens = gb.elements();
  for (const auto& v : m.kernel()) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) ts.push_back({basis[j], v[j]});
    gens.push_back(Polynomial::from_terms(a.ring(), std::move(ts)));
  }
  return Ideal(a.ring(), std::move(gens), a.options());
}

}  // namespace

Ideal colon(const Ideal& a, const Polynomial& f) {
  if (f.is_zero() || a.contains(f)) return Ideal(a.ring(), {Polynomial::constant(a.ring(), 1)}, a.options());
  if (auto fast = colon_by_kernel(a, f)) return *fast;
  Ideal principal(a.ring(), {f}, a.options());
  Ideal both = intersect(a, principal);
  std::vector<Polynomial> out;
  for (const auto& g : both.gb().elements()) out.push_back(divide_exact(g, f));
  return Ideal(a.ring(), std::move(out), a.options());
}

PresentedIdeal ideal_intersect(const PresentedIdeal& i, const PresentedIdeal& j) {
  check_compatible(i, j, "ideal_intersect");
  Ideal r = intersect(i.ideal(), j.ideal());
  return i.with_generators(r.gb().elements());
}

PresentedIdeal ideal_colon(const PresentedIdeal& i, const Polynomial& f) {
  if (!same_ring(i.ring(), f.ring()) && !f.is_zero()) throw MathError("ideal_colon: ambient ring mismatch");
  Ideal r = colon(i.ideal(), f);
  return i.with_generators(r.gb().elements());
}

PresentedIdeal ideal_colon_ideal(const PresentedIdeal& i, const PresentedIdeal& j) {
  check_compatible(i, j, "ideal_colon_ideal");
  std::optional<Ideal> acc;
  for (const auto& g : j.gb().elements()) {
    Ideal c = colon(i.ideal(), g);
    acc = acc ? intersect(*acc, c) : c;
  }
  if (!acc) return i.with_generators({Polynomial::constant(i.ring(), 1)});
  return i.with_generators(acc->gb().elements());
}

Saturation saturate(const PresentedIdeal& i, const Polynomial& f) {
  if (f.is_zero()) throw MathError("saturation by the zero polynomial");
  PresentedIdeal cur = i;
  unsigned k = 0;
  for (;;) {
    PresentedIdeal next = ideal_colon(cur, f);
    FORMCONE_ASSERT(next.contains(cur), "saturation chain is not ascending");
    if (cur.contains(next)) return {cur, k};
    cur = next;
    ++k;
  }
}

std::vector<Polynomial> elimination_generators(const Ideal& a, const std::vector<std::size_t>& vars) {
  const RingPtr& r = a.ring();
  if (vars.empty()) return a.gb().elements();
  std::vector<std::size_t> perm;  // new position -> old index
  for (auto v : vars) perm.push_back(v);
  for (std::size_t i = 0; i < r->size(); ++i)
    if (std::find(vars.begin(), vars.end(), i) == vars.end()) perm.push_back(i);
  std::vector<std::string> names;
  std::vector<std::size_t> to_new(r->size());
  for (std::size_t p = 0; p < perm.size(); ++p) {
    names.push_back(r->names()[perm[p]]);
    to_new[perm[p]] = p;
  }
  RingPtr re = Ring::make(r->field(), names, MonomialOrder::block(vars.size()));
  std::vector<Polynomial> gens;
  for (const auto& g : a.gb().elements()) gens.push_back(g.map_variables(re, to_new));
  GroebnerBasis gb = buchberger(gens, re, a.options());
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool uses = false;
    for (std::size_t p = 0; p < vars.size() && !uses; ++p) uses = g.uses_variable(p);
    if (!uses) out.push_back(g.map_variables(r, perm));
  }
  return out;
}

PresentedIdeal eliminate(const PresentedIdeal& i, const std::vector<std::size_t>& vars) {
  return i.with_generators(elimination_generators(i.ideal(), vars));
}

std::optional<std::size_t> krull_dim(const Ideal& i) {
  const GroebnerBasis& gb = i.gb();
  if (gb.is_unit_ideal()) return std::nullopt;
  const std::size_t n = i.ring()->size();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements()) {
    std::uint32_t mask = 0;
    const Monomial& m = g.lead_monomial();
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) mask |= 1u << v;
    supports.push_back(mask);
  }
  auto independent = [&](std::uint32_t set) {
    for (auto s : supports)
      if ((s & ~set) == 0) return false;
    return true;
  };
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint32_t, std::size_t)> dfs = [&](std::size_t v, std::uint32_t set,
                                                                        std::size_t size) {
    best = std::max(best, size);
    if (size + (n - v) <= best) return;
    for (std::size_t w = v; w < n; ++w) {
      std::uint32_t next = set | (1u << w);
      if (independent(next)) dfs(w + 1, next, size + 1);
    }
  };
  dfs(0, 0, 0);
  return best;
}

std::optional<std::size_t> krull_dim(const PresentedIdeal& i) { return krull_dim(i.ideal()); }

bool ideal_equal(const PresentedIdeal& i, const PresentedIdeal& j) {
  check_compatible(i, j, "ideal_equal");
  return i.ideal() == j.ideal();
}

bool ideal_member(const Polynomial& f, const PresentedIdeal& i) { return i.contains(f); }

}  // namespace formcone
