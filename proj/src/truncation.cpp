#include "formcone/truncation.hpp"

#include <functional>
#include <map>

#include "formcone/errors.hpp"

namespace formcone {

namespace {

std::vector<Monomial> monomials_upto(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v == n) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(v, e);
      rec(v + 1, left - e);
    }
    m.set(v, 0);
  };
  rec(0, d);
  return out;
}

Polynomial combine(const RingPtr& ring, const std::vector<Monomial>& basis,
                   const std::vector<Scalar>& v) {
  std::vector<Term> ts;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) ts.push_back({basis[j], v[j]});
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace

ComponentBasis component_basis(const GradedQuotientPresentation& g, unsigned n) {
  ComponentBasis b;
  b.degree = n;
  b.monomials = component_monomials(g, n);
  b.dimension = b.monomials.size();
  return b;
}

Matrix multiplication_matrix(const GradedQuotientPresentation& g, const GradedElement& b,
                             unsigned n) {
  auto src = component_monomials(g, n);
  auto dst = component_monomials(g, n + b.degree);
  std::map<std::vector<std::uint32_t>, std::size_t> row;
  for (std::size_t i = 0; i < dst.size(); ++i) row.emplace(dst[i].exponents(), i);
  Matrix m(g.ring->field(), dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Polynomial image = g.ideal.reduce(b.representative.mul_term(src[j], 1));
    for (const auto& t : image.terms()) {
      auto it = row.find(t.mono.exponents());
      if (it == row.end()) throw MathError("multiplier is not homogeneous of the stated degree");
      m.at(it->second, j) = t.coef;
    }
  }
  return m;
}

TruncatedRegularity truncated_regularity(const GradedQuotientPresentation& g,
                                         const GradedElement& b, unsigned n_max) {
  for (unsigned n = 0; n <= n_max; ++n) {
    auto ker = multiplication_matrix(g, b, n).kernel();
    if (!ker.empty())
      return {false, n, combine(g.ring, component_monomials(g, n), ker.front())};
  }
  return {};
}

TruncatedLZero truncated_lzero(const FiltrationContext& ctx, unsigned n, unsigned l,
                               unsigned degree_cap) {
  const RingPtr& ring = ctx.ring();
  const auto& sys = ctx.system();
  if (sys.empty()) throw MathError("the system of elements is empty");
  auto mons = monomials_upto(ring->size(), degree_cap);
  std::vector<PresentedIdeal> targets;
  std::vector<Polynomial> powers;
  for (const auto& e : sys) {
    targets.push_back(ctx.module_power(n + l * e.degree));
    powers.push_back(e.element.pow(l));
  }
  // Rows: (system index, monomial) of the normal forms.
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> row;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j)
    for (std::size_t i = 0; i < sys.size(); ++i) {
      Polynomial nf = targets[i].ideal().reduce(powers[i].mul_term(mons[j], 1));
      for (const auto& t : nf.terms()) {
        auto key = std::make_pair(i, t.mono.exponents());
        auto it = row.emplace(key, row.size()).first;
        cols[j].push_back({it->second, t.coef});
      }
    }
  Matrix m(ring->field(), row.size(), mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j)
    for (const auto& [r, c] : cols[j]) m.at(r, j) = c;
  TruncatedLZero out;
  const PresentedIdeal base = ctx.module_power(n);
  for (const auto& v : m.kernel()) {
    Polynomial g = combine(ring, mons, v);
    if (out.vanishing && !base.contains(g)) {
      out.vanishing = false;
      out.witness = g;
    }
    out.kernel.push_back(std::move(g));
  }
  return out;
}

std::vector<std::size_t> hilbert_by_colength(const FiltrationContext& ctx, unsigned upto) {
  std::vector<std::size_t> lengths;
  for (unsigned n = 0; n <= upto + 1; ++n) {
    auto c = colength(ctx.module_power(n).ideal());
    if (!c) throw MathError("M/q^" + std::to_string(n) + "M is not finite-dimensional");
    lengths.push_back(*c);
  }
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= upto; ++n) out.push_back(lengths[n + 1] - lengths[n]);
  return out;
}

}  // namespace formcone
