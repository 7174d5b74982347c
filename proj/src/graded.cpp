#include "formcone/graded.hpp"

#include <functional>
#include <map>

#include "formcone/errors.hpp"

namespace formcone {

namespace {

Ideal with_modulo(const GradedQuotientPresentation& g, const std::vector<Polynomial>& modulo) {
  if (modulo.empty()) return g.ideal;
  auto gens = g.ideal.gb().elements();
  gens.insert(gens.end(), modulo.begin(), modulo.end());
  return Ideal(g.ring, std::move(gens), g.ideal.options());
}

std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < r; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Monomial> component_of(const GradedQuotientPresentation& g, const GroebnerBasis& gb,
                                   unsigned n) {
  const std::size_t nx = g.num_x, nv = g.ring->size();
  std::vector<Monomial> out;
  if (gb.is_unit_ideal()) return out;
  for (std::size_t v = nx; v < nv; ++v)
    if (g.weights[v] != 1) throw MathError("component enumeration needs unit weights on y");
  Monomial m(nv);
  auto standard = [&](const Monomial& x) {
    for (const auto& e : gb.elements())
      if (divides(e.lead_monomial(), x)) return false;
    return true;
  };
  // Enumerate y-parts of degree n, then the finite box of x-parts.
  std::function<void(std::size_t, unsigned)> ys = [&](std::size_t v, unsigned left) {
    if (v == nv) {
      if (left) return;
      std::vector<std::uint32_t> bound(nx, 0);
      for (const auto& e : gb.elements()) {
        const Monomial& lm = e.lead_monomial();
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < nx; ++i)
          if (lm[i]) ++support, var = i;
        if (support != 1) continue;
        bool y_divides = true;
        for (std::size_t j = nx; j < nv; ++j)
          if (lm[j] > m[j]) y_divides = false;
        if (y_divides && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
      }
      for (auto b : bound)
        if (b == 0) throw MathError("graded component is not finite-dimensional");
      std::function<void(std::size_t)> xs = [&](std::size_t i) {
        if (i == nx) {
          if (standard(m)) out.push_back(m);
          return;
        }
        for (std::uint32_t e = 0; e < bound[i]; ++e) {
          m.set(i, e);
          if (!standard(m)) break;
          xs(i + 1);
        }
        m.set(i, 0);
      };
      xs(0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(v, e);
      ys(v + 1, left - e);
    }
    m.set(v, 0);
  };
  ys(nx, n);
  return out;
}

}  // namespace

std::vector<Monomial> component_monomials(const GradedQuotientPresentation& g, unsigned n,
                                          const std::vector<Polynomial>& modulo) {
  Ideal j = with_modulo(g, modulo);
  return component_of(g, j.gb(), n);
}

std::vector<std::size_t> hilbert_function(const GradedQuotientPresentation& g, unsigned upto) {
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= upto; ++n) out.push_back(component_of(g, g.ideal.gb(), n).size());
  return out;
}

std::optional<std::size_t> graded_dim(const GradedQuotientPresentation& g) {
  return krull_dim(g.ideal);
}

RegularityResult is_regular_element(const GradedQuotientPresentation& g, const Polynomial& b,
                                    const std::vector<Polynomial>& modulo) {
  if (!same_ring(b.ring(), g.ring)) throw MathError("element outside the presentation ring");
  if (!weighted_degree(b, g.weights)) throw MathError("element is not homogeneous");
  Ideal j = with_modulo(g, modulo);
  if (j.is_unit()) return {true, std::nullopt};
  Polynomial br = j.reduce(b);
  if (br.is_zero()) return {false, Polynomial::constant(g.ring, 1)};
  Ideal col = colon(j, br);
  for (const auto& c : col.gb().elements()) {
    Polynomial w = j.reduce(c);
    if (!w.is_zero()) return {false, w};
  }
  return {true, std::nullopt};
}

ColonChainResult colon_chain_regularity(const FiltrationContext& ctx, const Polynomial& b,
                                        unsigned d, unsigned n_max) {
  if (!ctx.module_power(d).contains(b)) throw MathError("element does not lie in q^d M");
  for (unsigned n = 0; n <= n_max; ++n) {
    auto lhs = ideal_colon(ctx.module_power(n + d), b);
    if (!ideal_equal(lhs, ctx.module_power(n))) return {false, n};
  }
  return {true, std::nullopt};
}

FreeModuleElement koszul_differential(const std::vector<Polynomial>& gens, std::size_t i,
                                      const FreeModuleElement& v) {
  const std::size_t r = gens.size();
  auto src = subsets(r, i), dst = subsets(r, i - 1);
  if (v.rank() != src.size()) throw MathError("Koszul chain has the wrong rank");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < dst.size(); ++k) index.emplace(dst[k], k);
  const RingPtr& ring = gens.front().ring();
  FreeModuleElement out{std::vector<Polynomial>(dst.size(), Polynomial(ring))};
  for (std::size_t s = 0; s < src.size(); ++s) {
    if (v.components[s].is_zero()) continue;
    for (std::size_t k = 0; k < src[s].size(); ++k) {
      auto face = src[s];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial term = v.components[s] * gens[src[s][k]];
      auto& slot = out.components[index.at(face)];
      slot = (k % 2 == 0) ? slot + term : slot - term;
    }
  }
  return out;
}

GradeReport koszul_grade(const GradedQuotientPresentation& g, const std::vector<Polynomial>& gens,
                         const std::vector<Polynomial>& modulo) {
  GradeReport rep;
  rep.method = "koszul";
  rep.generators = gens;
  Ideal j = with_modulo(g, modulo);
  for (const auto& f : gens)
    if (!weighted_degree(f, g.weights)) throw MathError("generator is not homogeneous");
  auto all = j.gb().elements();
  all.insert(all.end(), gens.begin(), gens.end());
  if (Ideal(g.ring, all, j.options()).is_unit()) return rep;  // QG = G
  const std::size_t r = gens.size();
  const auto& h = j.gb().elements();
  for (std::size_t i = r; i >= 1; --i) {
    auto top = subsets(r, i), low = subsets(r, i - 1);
    // Cycles: images of unit vectors under d_i, taken modulo H.
    std::vector<FreeModuleElement> cols;
    for (std::size_t s = 0; s < top.size(); ++s)
      cols.push_back(koszul_differential(gens, i, unit_vector(g.ring, top.size(), s)));
    auto cycles = syzygy_basis(cols, h, j.options());
    // Boundaries: d_{i+1}(K_{i+1}) + H K_i.
    std::vector<FreeModuleElement> bounds;
    if (i < r) {
      auto up = subsets(r, i + 1);
      for (std::size_t s = 0; s < up.size(); ++s)
        bounds.push_back(koszul_differential(gens, i + 1, unit_vector(g.ring, up.size(), s)));
    }
    for (std::size_t s = 0; s < top.size(); ++s)
      for (const auto& p : h) {
        auto e = unit_vector(g.ring, top.size(), s);
        e.components[s] = p;
        bounds.push_back(e);
      }
    auto bgb = module_groebner(bounds, g.ring, j.options());
    for (const auto& z : cycles) {
      if (module_normal_form(z, bgb).is_zero()) continue;
      rep.value = r - i;
      rep.koszul_index = i;
      rep.koszul_cycle = z;
      return rep;
    }
  }
  // H_0 = G/QG is nonzero.
  rep.value = r;
  rep.koszul_index = 0;
  return rep;
}

std::vector<Polynomial> maximal_ideal_generators(const GradedQuotientPresentation& g) {
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < g.ring->size(); ++v) {
    auto x = Polynomial::variable(g.ring, v);
    if (!g.ideal.contains(x)) out.push_back(x);
  }
  return out;
}

GradeReport depth(const GradedQuotientPresentation& g) {
  return koszul_grade(g, maximal_ideal_generators(g));
}

bool is_system_of_parameters(const GradedQuotientPresentation& g,
                             const std::vector<Polynomial>& elems) {
  auto d = graded_dim(g);
  if (!d || elems.size() != *d) return false;
  auto gens = g.ideal.gb().elements();
  gens.insert(gens.end(), elems.begin(), elems.end());
  auto q = krull_dim(Ideal(g.ring, std::move(gens), g.ideal.options()));
  return q && *q == 0;
}

}  // namespace formcone
