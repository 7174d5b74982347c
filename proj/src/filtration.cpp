#include "formcone/filtration.hpp"

#include <algorithm>

#include "formcone/errors.hpp"

namespace formcone {

PresentedIdeal PowerLadder::power(unsigned n) {
  std::lock_guard lock(mutex_);
  if (powers_.empty()) powers_.push_back(q_.with_generators({Polynomial::constant(q_.ring(), 1)}));
  while (powers_.size() <= n) {
    const PresentedIdeal& prev = powers_.back();
    // Multiply a basis of the previous power, reduced modulo the base, by q.
    std::vector<Polynomial> gens;
    for (const auto& f : prev.gb().elements()) {
      Polynomial r = prev.base() ? prev.base()->reduce(f) : f;
      if (r.is_zero()) continue;
      for (const auto& g : q_.generators()) gens.push_back(r * g);
    }
    powers_.push_back(q_.with_generators(std::move(gens)));
  }
  return powers_[n];
}

std::optional<std::uint32_t> weighted_degree(const Polynomial& f,
                                             const std::vector<std::uint32_t>& weights) {
  std::optional<std::uint32_t> deg;
  for (const auto& t : f.terms()) {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * t.mono[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

std::string GradedQuotientPresentation::str() const {
  std::string s = "k[";
  for (std::size_t i = 0; i < ring->size(); ++i) s += (i ? ", " : "") + ring->names()[i];
  s += "]/(";
  const auto& g = ideal.gb().elements();
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].str();
  return s + ")";
}

struct FiltrationContext::Caches {
  struct Slot {
    std::once_flag once;
    GradedQuotientPresentation value;
  };
  // Ring-level slots are shared with quotients by elements.
  std::shared_ptr<Slot> form_ring = std::make_shared<Slot>();
  std::shared_ptr<Slot> rees = std::make_shared<Slot>();
  std::shared_ptr<Slot> form_module = std::make_shared<Slot>();
};

namespace {

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// base + (y_j - f_j T) over k[T, x, y], T eliminated; with `form` the
// images f_j(x) are added to the result.
GradedQuotientPresentation build_presentation(const RingPtr& ring, const Ideal& base,
                                              const std::vector<Polynomial>& q_gens,
                                              PresentationKind kind) {
  const std::size_t n = ring->size(), s = q_gens.size();
  std::vector<std::string> names = ring->names();
  for (std::size_t j = 0; j < s; ++j) names.push_back(fresh_name("y" + std::to_string(j + 1), names));
  std::vector<std::string> rees_names{fresh_name("T", names)};
  rees_names.insert(rees_names.end(), names.begin(), names.end());

  std::vector<std::uint32_t> weights(n + s, 0);
  std::fill(weights.begin() + static_cast<std::ptrdiff_t>(n), weights.end(), 1u);
  auto pres = Ring::make(ring->field(), names, MonomialOrder::weighted(weights));
  auto rees = Ring::make(ring->field(), rees_names, MonomialOrder::block(1));

  // x_i -> i + 1 in the Rees ring.
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  std::vector<Polynomial> gens;
  for (const auto& g : base.gb().elements()) gens.push_back(g.map_variables(rees, shift));
  auto t = Polynomial::variable(rees, 0);
  for (std::size_t j = 0; j < s; ++j)
    gens.push_back(Polynomial::variable(rees, n + 1 + j) - q_gens[j].map_variables(rees, shift) * t);
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(gens, rees, base.options()));

  // Drop T: index k -> k - 1.
  std::vector<std::size_t> down(n + s + 1, 0);
  for (std::size_t k = 1; k <= n + s; ++k) down[k] = k - 1;
  std::vector<Polynomial> h;
  for (const auto& g : gb->elements())
    if (!g.uses_variable(0)) h.push_back(g.map_variables(pres, down));
  if (kind != PresentationKind::rees) {
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    for (const auto& f : q_gens) h.push_back(f.map_variables(pres, id));
  }

  GradedQuotientPresentation out;
  out.kind = kind;
  out.ring = pres;
  out.weights = weights;
  out.num_x = n;
  out.ideal = Ideal(pres, std::move(h), base.options());
  out.q_generators = q_gens;
  out.rees_ring = rees;
  out.rees_gb = std::move(gb);
  return out;
}

}  // namespace

FiltrationContext FiltrationContext::make(RingPtr ring, std::vector<Polynomial> base_gens,
                                          std::vector<Polynomial> module_gens,
                                          std::vector<Polynomial> q_gens,
                                          std::vector<ClaimedElement> system,
                                          FiltrationParams params) {
  FiltrationContext ctx;
  ctx.ring_ = ring;
  ctx.params_ = params;
  ctx.base_gens_ = std::move(base_gens);
  ctx.module_gens_ = std::move(module_gens);
  for (auto& f : q_gens)
    if (!f.is_zero()) ctx.q_gens_.push_back(std::move(f));
  ctx.base_a_ = make_base(ring, ctx.base_gens_, params.gb);
  ctx.base_m_ = make_base(ring, concat(ctx.base_gens_, ctx.module_gens_), params.gb);
  PresentedIdeal qa(ring, ctx.q_gens_, ctx.base_a_, params.gb);
  if (ctx.base_a_->is_unit()) throw MathError("the base ring is zero");
  if (qa.is_unit()) throw MathError("q is not a proper ideal");
  ctx.ladder_a_ = std::make_shared<PowerLadder>(qa);
  ctx.ladder_m_ = std::make_shared<PowerLadder>(PresentedIdeal(ring, ctx.q_gens_, ctx.base_m_, params.gb));
  ctx.caches_ = std::make_shared<Caches>();
  for (auto& e : system) {
    auto c = initial_degree(ctx, e.element, params.probe_cap);
    SystemElement se{e.element, c.value_or(params.probe_cap), !c.has_value()};
    if (e.degree && (se.zero_flag || *e.degree != se.degree))
      throw InputError("claimed degree " + std::to_string(*e.degree) + " of " + e.element.str() +
                       " differs from its initial degree " +
                       (se.zero_flag ? ">= " + std::to_string(params.probe_cap)
                                     : std::to_string(se.degree)));
    ctx.system_.push_back(std::move(se));
  }
  return ctx;
}

PresentedIdeal FiltrationContext::q_ring() const { return ring_power(1); }
PresentedIdeal FiltrationContext::q_module() const { return module_power(1); }

bool FiltrationContext::supported_at_origin() const {
  PresentedIdeal qm = module_power(1);
  const Ideal& j = qm.ideal();
  if (j.is_unit()) return false;
  for (const auto& g : j.gb().elements())
    for (const auto& t : g.terms())
      if (t.mono.is_one()) return false;
  auto len = colength(j);
  if (!len) return false;
  for (std::size_t v = 0; v < ring_->size(); ++v)
    if (!j.contains(Polynomial::variable(ring_, v).pow(static_cast<unsigned>(*len)))) return false;
  return true;
}

const GradedQuotientPresentation& FiltrationContext::form_ring() const {
  auto& slot = *caches_->form_ring;
  std::call_once(slot.once, [&] {
    slot.value = build_presentation(ring_, *base_a_, q_gens_, PresentationKind::form_ring);
  });
  return slot.value;
}

const GradedQuotientPresentation& FiltrationContext::form_module() const {
  auto& slot = *caches_->form_module;
  std::call_once(slot.once, [&] {
    slot.value = build_presentation(ring_, *base_m_, q_gens_, PresentationKind::form_module);
  });
  return slot.value;
}

const GradedQuotientPresentation& FiltrationContext::rees_algebra() const {
  auto& slot = *caches_->rees;
  std::call_once(slot.once, [&] {
    slot.value = build_presentation(ring_, *base_a_, q_gens_, PresentationKind::rees);
  });
  return slot.value;
}

FiltrationContext FiltrationContext::quotient_by(const Polynomial& b) const {
  if (!same_ring(b.ring(), ring_)) throw MathError("element outside the ambient ring");
  FiltrationContext ctx = *this;
  ctx.module_gens_.push_back(b);
  ctx.base_m_ = make_base(ring_, concat(base_gens_, ctx.module_gens_), params_.gb);
  ctx.ladder_m_ =
      std::make_shared<PowerLadder>(PresentedIdeal(ring_, q_gens_, ctx.base_m_, params_.gb));
  auto caches = std::make_shared<Caches>();
  caches->form_ring = caches_->form_ring;
  caches->rees = caches_->rees;
  ctx.caches_ = std::move(caches);
  return ctx;
}

std::optional<unsigned> initial_degree(const FiltrationContext& ctx, const Polynomial& a,
                                       unsigned cap) {
  if (ctx.base_ring_ideal()->contains(a)) throw MathError("element is zero in the ring");
  for (unsigned c = 1; c <= cap; ++c)
    if (!ctx.ring_power(c).contains(a)) return c - 1;
  return std::nullopt;
}

InitialForm initial_form(const FiltrationContext& ctx, const Polynomial& a) {
  const unsigned cap = ctx.params().probe_cap;
  const auto& g = ctx.form_module();
  if (ctx.module_ideal()->contains(a)) return {Polynomial(g.ring), 0, true};
  for (unsigned c = 1; c <= cap; ++c)
    if (!ctx.module_power(c).contains(a)) {
      auto lifted = lift_to_form(g, a, c - 1);
      return {lifted.representative, c - 1, false};
    }
  return {Polynomial(g.ring), cap, true};
}

GradedQuotientPresentation rees_presentation(const FiltrationContext& ctx, bool module) {
  if (!module) return ctx.rees_algebra();
  return build_presentation(ctx.ring(), *ctx.module_ideal(), ctx.q_generators(),
                            PresentationKind::rees);
}

GradedQuotientPresentation form_presentation(const FiltrationContext& ctx, FormTarget target) {
  return target == FormTarget::ring_of_a ? ctx.form_ring() : ctx.form_module();
}

GradedElement lift_to_form(const GradedQuotientPresentation& g, const Polynomial& a, unsigned c) {
  if (!g.rees_gb) throw MathError("presentation does not support lifting");
  const std::size_t n = g.num_x;
  if (a.ring()->size() != n) throw MathError("element outside the ambient ring");
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  Monomial tc(g.rees_ring->size());
  tc.set(0, c);
  Polynomial r = normal_form(a.map_variables(g.rees_ring, shift).mul_term(tc, 1), *g.rees_gb);
  if (r.uses_variable(0)) throw MathError("element does not lie in the requested power of q");
  std::vector<std::size_t> down(g.rees_ring->size(), 0);
  for (std::size_t k = 1; k < down.size(); ++k) down[k] = k - 1;
  Polynomial rep = g.ideal.reduce(r.map_variables(g.ring, down));
  auto deg = weighted_degree(rep, g.weights);
  FORMCONE_ASSERT(rep.is_zero() || (deg && *deg == c), "lifted form is not homogeneous");
  return {rep, c};
}

GradedQuotientPresentation tangent_cone_fast_path(const FiltrationContext& ctx) {
  const RingPtr& ring = ctx.ring();
  const std::size_t n = ring->size();
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(ring, i));
  PresentedIdeal m(ring, vars, ctx.base_ring_ideal());
  if (!ideal_equal(m, ctx.q_ring()))
    throw MathError("tangent cone fast path needs q generated by all variables");

  // Deform x -> t x over k[s, t, x]; (1 - s t) saturates by t, s is eliminated.
  std::vector<std::string> names = ring->names();
  std::string t_name = fresh_name("t", names);
  names.push_back(t_name);
  std::string s_name = fresh_name("s", names);
  std::vector<std::string> dnames{s_name, t_name};
  dnames.insert(dnames.end(), ring->names().begin(), ring->names().end());
  auto def = Ring::make(ring->field(), dnames, MonomialOrder::block(1));
  auto s = Polynomial::variable(def, 0), t = Polynomial::variable(def, 1);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(t * Polynomial::variable(def, i + 2));
  std::vector<Polynomial> gens{Polynomial::constant(def, 1) - s * t};
  for (const auto& g : ctx.module_ideal()->gb().elements()) gens.push_back(g.substitute(def, images));
  auto gb = buchberger(gens, def, ctx.params().gb);

  std::vector<std::uint32_t> weights(n, 1);
  auto cone = Ring::make(ring->field(), ring->names(), MonomialOrder::weighted(weights));
  std::vector<Polynomial> at_zero{Polynomial(cone), Polynomial(cone)};
  for (std::size_t i = 0; i < n; ++i) at_zero.push_back(Polynomial::variable(cone, i));
  std::vector<Polynomial> h;
  for (const auto& g : gb.elements())
    if (!g.uses_variable(0)) h.push_back(g.substitute(cone, at_zero));

  GradedQuotientPresentation out;
  out.kind = PresentationKind::cone;
  out.ring = cone;
  out.weights = weights;
  out.num_x = 0;
  out.ideal = Ideal(cone, std::move(h), ctx.params().gb);
  out.q_generators = vars;
  return out;
}

FiltrationContext quotient_by_element(const FiltrationContext& ctx, const Polynomial& b) {
  return ctx.quotient_by(b);
}

std::optional<Ideal> as_cone_ideal(const GradedQuotientPresentation& g, const RingPtr& target) {
  const std::size_t n = g.num_x, s = g.num_y();
  for (std::size_t i = 0; i < n; ++i)
    if (!g.ideal.contains(Polynomial::variable(g.ring, i))) return std::nullopt;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial(target));
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < s; ++j) {
    const Polynomial& f = g.q_generators[j];
    if (!f.is_monomial() || f.lead_coef() != 1 || f.lead_monomial().degree() != 1) return std::nullopt;
    std::size_t v = 0;
    while (!f.lead_monomial()[v]) ++v;
    auto idx = target->index_of(f.ring()->names()[v]);
    if (!idx || std::find(used.begin(), used.end(), *idx) != used.end()) return std::nullopt;
    used.push_back(*idx);
    images.push_back(Polynomial::variable(target, *idx));
  }
  std::vector<Polynomial> gens;
  for (const auto& h : g.ideal.gb().elements()) gens.push_back(h.substitute(target, images));
  return Ideal(target, std::move(gens), g.ideal.options());
}

}  // namespace formcone
