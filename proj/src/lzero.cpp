#include "formcone/lzero.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "formcone/errors.hpp"

namespace formcone {

namespace {

void require_system(const FiltrationContext& ctx) {
  if (ctx.system().empty()) throw MathError("the system of elements is empty");
  for (const auto& e : ctx.system())
    if (e.zero_flag)
      throw MathError("system element " + e.element.str() + " lies in q^" +
                      std::to_string(ctx.params().probe_cap) + "; its initial form is undefined");
}

// Initial forms of degree 0 make a*G generated in mixed degrees, where a
// zero annihilator no longer yields a homogeneous regular element.
void require_positive_degrees(const FiltrationContext& ctx) {
  require_system(ctx);
  for (const auto& e : ctx.system())
    if (e.degree == 0)
      throw MathError("system element " + e.element.str() +
                      " is not in q; the criterion needs initial degrees >= 1");
}

PresentedIdeal colon_intersection(const FiltrationContext& ctx,
                                  const std::vector<SystemElement>& system, unsigned n, unsigned l) {
  std::optional<PresentedIdeal> u;
  for (const auto& e : system) {
    auto c = ideal_colon(ctx.module_power(n + l * e.degree), e.element.pow(l));
    u = u ? ideal_intersect(*u, c) : c;
  }
  return *u;
}

// y-exponent vectors of total degree e in s variables.
std::vector<std::vector<std::uint32_t>> compositions(std::size_t s, unsigned e) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(s, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 >= s) {
      if (s == 0) {
        if (left == 0) out.push_back(cur);
        return;
      }
      cur[v] = left;
      out.push_back(cur);
      cur[v] = 0;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[v] = k;
      rec(v + 1, left - k);
    }
    cur[v] = 0;
  };
  rec(0, e);
  return out;
}

struct BasicTerm {
  Polynomial ambient;
  Polynomial image;
};

}  // namespace

LZeroRecord lzero_at(const FiltrationContext& ctx, unsigned n, const LZeroParams& params) {
  require_system(ctx);
  return lzero_at(ctx, ctx.system(), n, params);
}

LZeroRecord lzero_at(const FiltrationContext& ctx, const std::vector<SystemElement>& system,
                     unsigned n, const LZeroParams& params) {
  if (system.empty()) throw MathError("the system of elements is empty");
  LZeroRecord rec;
  rec.n = n;
  rec.window = params.window;
  const PresentedIdeal base = ctx.module_power(n);
  PresentedIdeal u = colon_intersection(ctx, system, n, 1);
  unsigned l = 1, equal_run = 0;
  rec.status = "budget";
  while (l < std::max(params.l_max, 1u)) {
    PresentedIdeal next = colon_intersection(ctx, system, n, l + 1);
    FORMCONE_ASSERT(next.contains(u), "colon chain is not ascending at l = " + std::to_string(l));
    bool same = u.contains(next);
    u = next;
    ++l;
    equal_run = same ? equal_run + 1 : 0;
    if (equal_run >= params.window) {
      rec.status = "stabilized";
      l -= params.window;
      break;
    }
  }
  FORMCONE_ASSERT(u.contains(base), "U does not contain q^n + I_M");
  rec.stabilized_l = l;
  rec.U = u;
  for (const auto& g : u.gb().elements()) {
    Polynomial r = base.ideal().reduce(g);
    if (!r.is_zero()) rec.quotient_generators.push_back(r);
  }
  rec.vanishing = rec.quotient_generators.empty();
  return rec;
}

LZeroScan lzero_scan(const FiltrationContext& ctx, const LZeroParams& params, bool stop_at_first) {
  require_system(ctx);
  LZeroScan scan;
  for (unsigned n = 0; n <= params.n_max; ++n) {
    scan.records.push_back(lzero_at(ctx, n, params));
    const auto& r = scan.records.back();
    if (r.status == "budget") scan.budget_hit = true;
    if (!r.vanishing && !scan.first_nonvanishing) {
      scan.first_nonvanishing = n;
      if (stop_at_first) break;
    }
  }
  return scan;
}

std::vector<GradedElement> system_forms(const FiltrationContext& ctx) {
  require_system(ctx);
  std::vector<GradedElement> out;
  const auto& g = ctx.form_module();
  for (const auto& e : ctx.system()) out.push_back(lift_to_form(g, e.element, e.degree));
  return out;
}

std::optional<RegularCandidate> find_regular_combination(const FiltrationContext& ctx,
                                                         const LZeroParams& params) {
  require_system(ctx);
  const auto& g = ctx.form_module();
  const RingPtr& ring = ctx.ring();
  const Field& k = ring->field();
  auto forms = system_forms(ctx);
  const auto& sys = ctx.system();

  // Degree-zero multipliers: a basis of G_0 = A/(q + I_M), or 1 if infinite.
  std::vector<Monomial> zero_basis;
  try {
    zero_basis = component_monomials(g, 0);
  } catch (const MathError&) {
    zero_basis = {Monomial(g.ring->size())};
  }

  unsigned lo = sys.front().degree, hi = lo;
  for (const auto& e : sys) lo = std::min(lo, e.degree), hi = std::max(hi, e.degree);
  std::mt19937 rng(1234567);
  for (unsigned d = lo; d <= hi + params.search_extra_degree; ++d) {
    std::vector<BasicTerm> terms;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      if (sys[i].degree > d || forms[i].representative.is_zero()) continue;
      for (const auto& beta : compositions(g.num_y(), d - sys[i].degree))
        for (const auto& mu : zero_basis) {
          Monomial pm = mu, am(ring->size());
          for (std::size_t v = 0; v < g.num_x; ++v) am.set(v, mu[v]);
          Polynomial amb = sys[i].element.mul_term(am, 1);
          for (std::size_t j = 0; j < beta.size(); ++j) {
            pm.set(g.num_x + j, beta[j]);
            if (beta[j]) amb = amb * g.q_generators[j].pow(beta[j]);
          }
          Polynomial img = g.ideal.reduce(forms[i].representative.mul_term(pm, 1));
          if (!img.is_zero()) terms.push_back({amb, img});
        }
    }
    if (terms.empty()) continue;
    auto try_combo = [&](const std::vector<Scalar>& lambda) -> std::optional<RegularCandidate> {
      Polynomial b(ring), img(g.ring);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (lambda[t] == 0) continue;
        b += terms[t].ambient.scale(lambda[t]);
        img += terms[t].image.scale(lambda[t]);
      }
      img = g.ideal.reduce(img);
      if (img.is_zero()) return std::nullopt;
      if (!is_regular_element(g, img).regular) return std::nullopt;
      return RegularCandidate{b, d, {img, d}};
    };
    // Single terms, then dense pseudorandom combinations.
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::vector<Scalar> lambda(terms.size(), Scalar(0));
      lambda[t] = 1;
      if (auto c = try_combo(lambda)) return c;
    }
    if (terms.size() == 1) continue;
    long span = k.is_prime_field() ? static_cast<long>(k.characteristic()) - 1 : 5;
    std::uniform_int_distribution<long> coef(-span, span);
    for (unsigned trial = 0; trial < params.search_random; ++trial) {
      std::vector<Scalar> lambda;
      for (std::size_t t = 0; t < terms.size(); ++t) lambda.push_back(k.from_int(coef(rng)));
      if (auto c = try_combo(lambda)) return c;
    }
  }
  return std::nullopt;
}

VanishingRegularityResult vanishing_regularity_check(const FiltrationContext& ctx, const LZeroParams& params) {
  require_positive_degrees(ctx);
  VanishingRegularityResult res;
  auto scan = lzero_scan(ctx, params, true);
  res.lzero_all_vanish = scan.all_vanish();
  res.first_nonvanishing = scan.first_nonvanishing;
  res.budget_hit = scan.budget_hit;
  if (scan.first_nonvanishing) res.lzero_witness = scan.records.back().quotient_generators;

  // (H : a*G) = H iff a*G contains a regular element.
  const auto& g = ctx.form_module();
  std::optional<Ideal> ann;
  for (const auto& f : system_forms(ctx)) {
    Ideal c = f.representative.is_zero() ? Ideal(g.ring, {Polynomial::constant(g.ring, 1)})
                                         : colon(g.ideal, f.representative);
    ann = ann ? intersect(*ann, c) : c;
  }
  res.regular_exists = true;
  if (!g.ideal.is_unit())
    for (const auto& c : ann->gb().elements()) {
      Polynomial w = g.ideal.reduce(c);
      if (!w.is_zero()) {
        res.regular_exists = false;
        res.annihilator_witness = w;
        break;
      }
    }
  if (res.regular_exists && !g.ideal.is_unit()) res.regular_witness = find_regular_combination(ctx, params);

  res.agree = res.lzero_all_vanish == res.regular_exists;
  if (!res.agree)
    res.status = res.budget_hit ? "raise-bounds" : "disagree";
  else if (res.regular_exists && !g.ideal.is_unit() && !res.regular_witness)
    res.status = "search-budget";
  else
    res.status = "agree";
  return res;
}

GradeReport grade_via_recursion(const FiltrationContext& ctx, const LZeroParams& params) {
  require_positive_degrees(ctx);
  GradeReport rep;
  rep.method = "lzero-recursion";
  const auto& g0 = ctx.form_module();
  FiltrationContext cur = ctx;
  const std::size_t bound = ctx.ring()->size() + 1;
  for (std::size_t step = 0;; ++step) {
    FORMCONE_ASSERT(step <= bound, "grade recursion did not terminate");
    // a*G = G: the grade is infinite.
    {
      const auto& g = cur.form_module();
      auto gens = g.ideal.gb().elements();
      for (const auto& f : system_forms(cur)) gens.push_back(f.representative);
      if (Ideal(g.ring, gens, g.ideal.options()).is_unit()) return rep;
    }
    auto scan = lzero_scan(cur, params, true);
    if (scan.first_nonvanishing) {
      rep.value = step;
      rep.lzero_n = scan.first_nonvanishing;
      rep.lzero_witness = scan.records.back().quotient_generators;
      return rep;
    }
    auto cand = find_regular_combination(cur, params);
    if (!cand)
      throw BudgetExceeded("no regular element found in aA after " + std::to_string(step) +
                           " recursion steps; widen the search or raise n_max");
    rep.sources.push_back(cand->b);
    rep.sequence.push_back(lift_to_form(g0, cand->b, cand->degree));
    cur = cur.quotient_by(cand->b);
  }
}

CriterionReport criterion_report(const FiltrationContext& ctx, const LZeroParams& params) {
  require_positive_degrees(ctx);
  CriterionReport rep;
  const auto& g = ctx.form_module();
  if (ctx.module_is_zero()) {
    rep.depth.method = rep.grade_direct.method = "koszul";
    rep.grade_recursion.method = "lzero-recursion";
    rep.notes.push_back("M = 0: every grade is infinite and the dimension is undefined");
    return rep;
  }
  rep.dim = graded_dim(g);
  auto dim_m = krull_dim(*ctx.module_ideal());
  FORMCONE_ASSERT(rep.dim == dim_m, "dim G_M(q) = " + std::to_string(rep.dim.value_or(0)) +
                                        " differs from dim M = " + std::to_string(dim_m.value_or(0)));
  rep.depth = depth(g);
  std::vector<Polynomial> forms;
  for (const auto& f : system_forms(ctx)) forms.push_back(f.representative);
  rep.grade_direct = koszul_grade(g, forms);
  rep.grade_recursion = grade_via_recursion(ctx, params);
  auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  FORMCONE_ASSERT(rep.grade_direct.value == rep.grade_recursion.value,
                  "grade mismatch: Koszul " + show(rep.grade_direct.value) + ", recursion " +
                      show(rep.grade_recursion.value));
  rep.lzero_table = lzero_scan(ctx, params, true).records;
  rep.sop_flag = is_system_of_parameters(g, forms);
  if (rep.sop_flag)
    FORMCONE_ASSERT(rep.grade_direct.value == rep.depth.value,
                    "grade over a system of parameters " + show(rep.grade_direct.value) +
                        " differs from depth " + show(rep.depth.value));
  std::size_t dep = rep.depth.value.value_or(0);
  rep.cm_verdict = rep.depth.value == rep.dim;
  rep.predicted_band = std::make_pair(dep, *rep.dim);
  rep.notes.push_back("nonvanishing of the higher modules is predicted for indices in [" +
                      std::to_string(dep) + ", " + std::to_string(*rep.dim) +
                      "], not computed");
  rep.notes.push_back("Lzero records use a stabilization window and are not certified");
  if (!ctx.supported_at_origin())
    rep.notes.push_back("V(q + I_M) is not the origin: affine and local answers may differ");
  return rep;
}

std::vector<SystemElement> squared_system(const FiltrationContext& ctx) {
  std::vector<SystemElement> out;
  for (const auto& e : ctx.system()) out.push_back({e.element * e.element, 2 * e.degree, e.zero_flag});
  return out;
}

RadicalCheck radical_invariance_check(const FiltrationContext& ctx,
                                      const std::vector<SystemElement>& alt,
                                      const LZeroParams& params) {
  require_system(ctx);
  RadicalCheck res;
  for (unsigned n = 0; n <= params.n_max; ++n) {
    auto a = lzero_at(ctx, ctx.system(), n, params);
    auto b = lzero_at(ctx, alt, n, params);
    if (a.status == "budget" || b.status == "budget") {
      res.budget_limited.push_back(n);
      continue;
    }
    if (!ideal_equal(a.U, b.U)) {
      res.equal = false;
      res.first_difference = n;
      return res;
    }
  }
  return res;
}

}  // namespace formcone
