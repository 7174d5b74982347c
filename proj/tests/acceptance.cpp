// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "formcone/errors.hpp"
#include "formcone/lzero.hpp"
#include "formcone/truncation.hpp"
#include "test_util.hpp"

using namespace formcone;
using namespace formcone::testing;

namespace {

struct Instance {
  std::vector<std::string> vars;
  std::string base, module, q, system;
  std::string label() const {
    std::string s = "[" + base + "] q=(" + q + ") a=(" + system + ")";
    if (!module.empty()) s += " M=A/(" + module + ")";
    return s;
  }
};

struct Built {
  Instance inst;
  FiltrationContext ctx;
};

FiltrationContext build(const Instance& in) {
  auto r = ring_qq(in.vars);
  auto list = [&](const std::string& s) { return s.empty() ? std::vector<Polynomial>{} : Ps(r, s); };
  std::vector<FiltrationContext::ClaimedElement> sys;
  for (auto& a : list(in.system)) sys.push_back({a, std::nullopt});
  return FiltrationContext::make(r, list(in.base), list(in.module), list(in.q), sys);
}

// Weighted-homogeneous monomial and binomial bases in at most three
// variables, q maximal or principal, systems of at most two elements.
std::vector<Built> corpus(std::ostream& log) {
  struct Family {
    std::vector<std::string> vars;
    std::vector<std::string> bases, qs, systems;
  };
  std::vector<Family> families{
      {{"x"}, {"", "x^3"}, {"x"}, {"x", "x^2"}},
      {{"x", "y"},
       {"", "x*y", "x^2, x*y", "y^2 - x^3", "x^2 - y^2", "x*y^2"},
       {"x, y", "x", "y"},
       {"x", "y", "x + y", "x, y", "x^2"}},
      {{"X", "Y", "Z"},
       {"X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2", "X*Z, Y*Z", "X*Y - Z^2", "X^2, X*Y", "X*Y*Z",
        "Y^2 - X*Z"},
       {"X, Y, Z", "X"},
       {"X", "Z", "X, Y", "X + Y + Z", "X, Z"}},
  };
  std::vector<Built> out;
  std::size_t skipped = 0;
  for (const auto& f : families)
    for (const auto& b : f.bases)
      for (const auto& q : f.qs)
        for (const auto& s : f.systems) {
          Instance in{f.vars, b, "", q, s};
          try {
            auto ctx = build(in);
            bool usable = true;
            for (const auto& e : ctx.system()) usable = usable && !e.zero_flag && e.degree >= 1;
            if (!usable) {
              ++skipped;
              continue;
            }
            out.push_back({in, std::move(ctx)});
          } catch (const MathError&) {
            ++skipped;
          }
        }
  // Modules M = A/J with J larger than the base.
  std::vector<Instance> modules{
      {{"X", "Y", "Z"}, "X*Z, Y*Z", "Z", "X, Y, Z", "X"},
      {{"X", "Y", "Z"}, "X*Y - Z^2", "X", "X, Y, Z", "Y"},
      {{"x", "y"}, "", "x*y", "x, y", "x + y"},
      {{"x", "y"}, "", "x^2", "x, y", "y"},
  };
  for (const auto& in : modules) out.push_back({in, build(in)});
  log << "corpus: " << out.size() << " instances, " << skipped << " combinations skipped\n";
  return out;
}

// Progress on stderr when ACCEPTANCE_TRACE is set.
void trace(const std::string& what) {
  static const bool on = std::getenv("ACCEPTANCE_TRACE") != nullptr;
  static auto start = std::chrono::steady_clock::now();
  if (on)
    std::cerr << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << "s " << what << std::endl;
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

// Criterion 1.
Outcome tangent_cone(std::ostream& log) {
  Instance in{{"X", "Y", "Z"}, "X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2", "", "X, Y, Z", "X"};
  auto ctx = build(in);
  const auto& g = ctx.form_module();
  auto cone = as_cone_ideal(g, ctx.ring());
  Outcome o;
  if (!cone) return {false, "form ring is not a cone presentation"};
  Ideal expected(ctx.ring(), Ps(ctx.ring(), "X*Z, Y*Z, Y^4, Z^2"));
  o.pass = *cone == expected;
  auto fast = as_cone_ideal(tangent_cone_fast_path(ctx), ctx.ring());
  std::string fast_str;
  if (fast)
    for (const auto& p : fast->gb().elements()) fast_str += p.str() + "; ";
  log << "  presentation: " << g.str() << "\n  fast path GB: " << fast_str << "\n";
  o.pass = o.pass && fast && *fast == expected;
  o.summary = "form ring ideal GB-equal to (XZ, YZ, Y^4, Z^2)";
  return o;
}

// Criterion 2.
Outcome verdicts(std::ostream& log) {
  Instance in{{"X", "Y", "Z"}, "X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2", "", "X, Y, Z", "X"};
  auto ctx = build(in);
  auto rep = criterion_report(ctx);
  auto dim_a = krull_dim(*ctx.base_ring_ideal());
  bool ok = dim_a == 1u && rep.dim == 1u && rep.depth.value == 0u && !rep.cm_verdict;
  log << "  dim A " << show(dim_a) << ", dim G " << show(rep.dim) << ", depth "
      << show(rep.depth.value) << ", cm " << rep.cm_verdict << "\n";

  auto principal = build({in.vars, in.base, "", "X", "X"});
  auto scan_p = lzero_scan(principal, {});
  ok = ok && scan_p.all_vanish() && scan_p.records.size() == 11;
  log << "  q = (X): " << (scan_p.all_vanish() ? "vanishes for all n <= 10" : "nonvanishing") << "\n";

  auto scan_m = lzero_scan(ctx, {});
  bool witnessed = false;
  if (scan_m.first_nonvanishing) {
    const auto& rec = scan_m.records[*scan_m.first_nonvanishing];
    auto x = P(ctx.ring(), "X");
    for (const auto& w : rec.quotient_generators) {
      bool in_u = ctx.module_power(rec.n + rec.stabilized_l).contains(w * x.pow(rec.stabilized_l));
      bool outside = !ctx.module_power(rec.n).contains(w);
      log << "  q = m: nonvanishing at n = " << rec.n << ", witness " << w.str() << " (X^"
          << rec.stabilized_l << " * w in q^" << rec.n + rec.stabilized_l << ": " << in_u
          << ", w not in q^" << rec.n << ": " << outside << ")\n";
      witnessed = witnessed || (in_u && outside);
    }
  }
  ok = ok && witnessed && *scan_m.first_nonvanishing <= 10;
  return {ok, "dim 1, depth 0, not Cohen-Macaulay; principal scan vanishes, maximal scan has a witness"};
}

// Criterion 3.
Outcome equivalence_suite(std::vector<Built>& cs, std::ostream& log) {
  std::size_t agree = 0, disagree = 0, budget = 0, search_budget = 0, regular = 0;
  for (auto& b : cs) {
    trace("equivalence_suite " + b.inst.label());
    auto res = vanishing_regularity_check(b.ctx);
    if (res.status == "disagree") {
      ++disagree;
      log << "  DISAGREE " << b.inst.label() << "\n";
    } else if (res.status == "raise-bounds") {
      ++budget;
      log << "  budget " << b.inst.label() << "\n";
    } else {
      ++agree;
      if (res.regular_exists) ++regular;
      if (res.status == "search-budget") ++search_budget;
    }
  }
  std::ostringstream s;
  s << cs.size() << " instances: " << agree << " agree (" << regular << " with a regular form), "
    << disagree << " disagree, " << budget << " budget-excluded, " << search_budget
    << " without explicit regular witness";
  bool ok = cs.size() >= 30 && disagree == 0 && budget * 10 <= cs.size();
  return {ok, s.str()};
}

// Criterion 4.
Outcome grade_suite(std::vector<Built>& cs, std::ostream& log) {
  std::size_t match = 0, mismatch = 0, budget = 0;
  for (auto& b : cs) {
    trace("grade_suite " + b.inst.label());
    std::vector<Polynomial> forms;
    for (const auto& f : system_forms(b.ctx)) forms.push_back(f.representative);
    auto direct = koszul_grade(b.ctx.form_module(), forms);
    try {
      auto rec = grade_via_recursion(b.ctx);
      if (rec.value == direct.value) {
        ++match;
      } else {
        ++mismatch;
        log << "  MISMATCH " << b.inst.label() << ": Koszul " << show(direct.value)
            << ", recursion " << show(rec.value) << "\n";
      }
    } catch (const BudgetExceeded& e) {
      ++budget;
      log << "  budget " << b.inst.label() << ": " << e.what() << "\n";
    }
  }
  std::ostringstream s;
  s << match << " match, " << mismatch << " mismatch, " << budget << " budget";
  return {mismatch == 0 && budget == 0 && match == cs.size(), s.str()};
}

// Criterion 5.
Outcome dimension_suite(std::vector<Built>& cs, std::ostream& log) {
  std::size_t bad = 0;
  for (auto& b : cs) {
    trace("dimension_suite " + b.inst.label());
    auto dg = graded_dim(b.ctx.form_module());
    auto dm = krull_dim(*b.ctx.module_ideal());
    if (dg != dm) {
      ++bad;
      log << "  MISMATCH " << b.inst.label() << ": dim G " << show(dg) << ", dim M " << show(dm) << "\n";
    }
  }
  return {bad == 0, std::to_string(cs.size() - bad) + "/" + std::to_string(cs.size()) + " equal"};
}

// Criterion 6.
Outcome band_suite(std::vector<Built>& cs, std::ostream& log) {
  std::size_t sop = 0, cm = 0, bad = 0;
  for (auto& b : cs) {
    trace("band_suite " + b.inst.label());
    std::vector<Polynomial> forms;
    for (const auto& f : system_forms(b.ctx)) forms.push_back(f.representative);
    if (!is_system_of_parameters(b.ctx.form_module(), forms)) continue;
    ++sop;
    auto rep = criterion_report(b.ctx);
    bool ok = rep.sop_flag && rep.dim && rep.predicted_band &&
              rep.predicted_band->first == rep.depth.value.value_or(0) &&
              rep.predicted_band->second == *rep.dim &&
              rep.cm_verdict == (rep.depth.value == rep.dim);
    if (rep.cm_verdict) {
      ++cm;
      ok = ok && rep.predicted_band && rep.predicted_band->first == rep.predicted_band->second;
    }
    if (!ok) {
      ++bad;
      log << "  FAIL " << b.inst.label() << "\n";
    }
  }
  std::ostringstream s;
  s << sop << " instances with a system of parameters (" << cm << " Cohen-Macaulay), " << bad
    << " violations";
  return {bad == 0 && sop > 0 && cm > 0 && cm < sop, s.str()};
}

Polynomial random_form(std::mt19937& rng, const RingPtr& r, int terms, std::uint32_t deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto mons = monomials_upto(r->size(), deg);
  std::vector<Monomial> top;
  for (const auto& m : mons)
    if (m.degree() == deg) top.push_back(m);
  std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    int c = coef(rng);
    if (c) ts.push_back({top[pick(rng)], Scalar(c)});
  }
  if (ts.empty()) ts.push_back({top[pick(rng)], Scalar(1)});
  return Polynomial::from_terms(r, ts);
}

// Criterion 7.
Outcome kernel_properties(std::ostream& log) {
  std::mt19937 rng(20240917);
  std::size_t cases = 0, failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      log << "  FAIL " << what << "\n";
    }
  };
  std::vector<RingPtr> rings{ring_qq({"x", "y", "z"}),
                             Ring::make(Field::prime(32003), {"x", "y", "z"}),
                             ring_qq({"x", "y", "z"}, MonomialOrder::lex())};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& r = rings[trial % rings.size()];
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2 + trial % 2; ++i) gens.push_back(random_form(rng, r, 3, 2 + (trial + i) % 2));
    auto gb = buchberger(gens, r);
    check(buchberger(gb.elements(), r) == gb, "idempotence");
    bool spolys = true;
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j)
        spolys = spolys && normal_form(s_polynomial(gb.elements()[i], gb.elements()[j]), gb).is_zero();
    check(spolys, "S-polynomials reduce to zero");
    Polynomial member = gens[0] * random_form(rng, r, 2, 1) + gens[1] * random_form(rng, r, 2, 1);
    Polynomial other = random_form(rng, r, 3, 3);
    for (const auto& h : {member, other})
      if (!h.is_zero())
        check(normal_form(h, gb).is_zero() == member_in_degree(h, gens, h.total_degree()),
              "NF membership");

    PresentedIdeal i(r, gens);
    auto f = random_poly(rng, r, 2, 2);
    if (f.is_zero() || f.is_constant()) f = P(r, "x + z");
    auto c = ideal_colon(i, f);
    bool sound = true;
    for (const auto& g : c.gb().elements()) sound = sound && i.contains(g * f);
    check(sound, "colon soundness");
    bool complete = true;
    for (const auto& g : colon_oracle(i.ideal(), f, 3)) complete = complete && c.contains(g);
    check(complete, "colon bounded completeness");

    auto sat = saturate(i, f);
    PresentedIdeal prev = i;
    bool chain = true;
    for (unsigned k = 1; k <= sat.exponent + 1; ++k) {
      auto cur = ideal_colon(prev, f);
      chain = chain && cur.contains(prev);
      if (k <= sat.exponent) chain = chain && !prev.contains(cur);
      if (k == sat.exponent + 1) chain = chain && prev.contains(cur);
      prev = cur;
    }
    check(chain && ideal_equal(prev, sat.ideal), "saturation exponent");
  }
  std::ostringstream s;
  s << cases << " randomized cases, " << failures << " failures";
  return {failures == 0 && cases >= 200, s.str()};
}

// Criterion 8.
Outcome oracle_suite(std::vector<Built>& cs, std::ostream& log) {
  std::size_t comparisons = 0, bad = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++comparisons;
    if (!ok) {
      ++bad;
      log << "  FAIL " << what << "\n";
    }
  };
  Instance sg{{"X", "Y", "Z"}, "X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2", "", "X, Y, Z", "X"};
  auto cone = build(sg);
  const std::vector<std::size_t> expected{1, 3, 3, 4, 4, 4};
  check(hilbert_function(cone.form_module(), 5) == expected, "Hilbert function of the cone");
  check(hilbert_by_colength(cone, 5) == expected, "colength Hilbert values of the cone");
  std::vector<std::size_t> by_basis;
  for (unsigned n = 0; n <= 5; ++n) by_basis.push_back(component_basis(cone.form_module(), n).dimension);
  check(by_basis == expected, "component bases of the cone");

  const unsigned cap = 5;
  for (auto& b : cs) {
    trace("oracle_suite " + b.inst.label());
    const auto& g = b.ctx.form_module();
    try {
      auto h = hilbert_function(g, cap);
      check(h == hilbert_by_colength(b.ctx, cap), "Hilbert values " + b.inst.label());
    } catch (const MathError&) {
      // Infinite components: no finite oracle.
    }
    bool finite = true;
    try {
      for (unsigned d = 0; d <= cap; ++d) component_basis(g, d);
    } catch (const MathError&) {
      finite = false;
    }
    if (finite)
      for (const auto& f : system_forms(b.ctx)) {
        if (f.representative.is_zero()) continue;
        auto exact = is_regular_element(g, f.representative);
        auto trunc = truncated_regularity(g, f, cap);
        bool ok = exact.regular ? trunc.regular : true;
        if (!exact.regular && exact.witness) {
          auto wd = weighted_degree(*exact.witness, g.weights);
          if (wd && *wd + f.degree <= cap) ok = ok && !trunc.regular;
        }
        if (!trunc.regular) ok = ok && !exact.regular;
        check(ok, "regularity " + b.inst.label());
      }
    for (unsigned n = 0; n <= 2; ++n) {
      auto rec = lzero_at(b.ctx, n);
      auto brute = truncated_lzero(b.ctx, n, rec.stabilized_l, 4);
      bool ok = true;
      for (const auto& k : brute.kernel) ok = ok && rec.U.contains(k);
      if (rec.vanishing) ok = ok && brute.vanishing;
      if (!brute.vanishing) ok = ok && !rec.vanishing;
      for (const auto& w : rec.quotient_generators)
        if (w.total_degree() <= 4) ok = ok && !brute.vanishing;
      check(ok, "lzero membership n=" + std::to_string(n) + " " + b.inst.label());
    }
  }
  std::ostringstream s;
  s << comparisons << " comparisons, " << bad << " disagreements; cone Hilbert function 1,3,3,4,4,4";
  return {bad == 0, s.str()};
}

// Criterion 9.
Outcome radical_suite(std::vector<Built>& cs, std::ostream& log) {
  std::size_t equal = 0, different = 0, budget = 0, limited = 0;
  LZeroParams params;
  for (auto& b : cs) {
    trace("radical_suite " + b.inst.label());
    try {
      auto res = radical_invariance_check(b.ctx, squared_system(b.ctx), params);
      if (!res.budget_limited.empty()) {
        ++limited;
        log << "  budget-limited " << b.inst.label() << " at " << res.budget_limited.size()
            << " values of n\n";
      }
      if (res.equal) {
        ++equal;
      } else {
        ++different;
        log << "  DIFFERENT " << b.inst.label() << " at n = " << res.first_difference.value_or(0) << "\n";
      }
    } catch (const MathError& e) {
      // a^2 may lie in q^cap; such instances are not comparable.
      ++budget;
      log << "  skipped " << b.inst.label() << ": " << e.what() << "\n";
    }
  }
  std::ostringstream s;
  s << equal << " instances equal for n <= " << params.n_max << ", " << different << " different, "
    << budget << " skipped, " << limited << " with budget-limited n";
  return {different == 0 && equal >= 10, s.str()};
}

}  // namespace

int main() {
  std::ostringstream buffer;
  std::ostream& log = std::getenv("ACCEPTANCE_TRACE") ? std::cerr : buffer;
  bool all = true;
  auto run = [&](int id, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << "  ["
              << buf << "]" << std::endl;
    all = all && o.pass;
  };

  run(1, [&] { return tangent_cone(log); });
  run(2, [&] { return verdicts(log); });
  std::vector<Built> cs = corpus(log);
  run(3, [&] { return equivalence_suite(cs, log); });
  run(4, [&] { return grade_suite(cs, log); });
  run(5, [&] { return dimension_suite(cs, log); });
  run(6, [&] { return band_suite(cs, log); });
  run(7, [&] { return kernel_properties(log); });
  run(8, [&] { return oracle_suite(cs, log); });
  run(9, [&] { return radical_suite(cs, log); });
  std::cout << "\ndetails:\n" << buffer.str();
  return all ? 0 : 1;
}
